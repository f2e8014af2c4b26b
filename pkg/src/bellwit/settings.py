
import os
from enum import Enum
from typing import Mapping, Optional
from typing_extensions import Annotated

from pydantic import BaseModel, Field

from bellwit.compute import ComputeBackend, MainProcessCompute, MultiprocessCompute, ThreadedCompute


THREADS_ENV = "BELLWIT_THREADS"
COMPUTE_ENV = "BELLWIT_COMPUTE"


class ComputeKind(Enum):
    MAIN = "main"
    THREADED = "threaded"
    MULTIPROCESS = "multiprocess"


class Settings(BaseModel):
    """Environment driven configuration.

    Parameters
    ----------
    threads : int, default: 0
        Worker cap from ``BELLWIT_THREADS``. ``0`` means one worker per processor core.
    compute : ComputeKind, default: ComputeKind.THREADED
        Compute backend from ``BELLWIT_COMPUTE``.
    """
    threads: Annotated[int, Field(ge=0)] = 0
    compute: ComputeKind = ComputeKind.THREADED


    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Read settings from the environment.

        Raises
        ------
        pydantic.ValidationError
            An environment variable has an invalid value.
        """
        if environ is None:
            environ = os.environ

        values = {}
        if environ.get(THREADS_ENV, "").strip() != "":
            values["threads"] = environ[THREADS_ENV].strip()

        if environ.get(COMPUTE_ENV, "").strip() != "":
            values["compute"] = environ[COMPUTE_ENV].strip().lower()

        return cls.model_validate(values)


    def compute_backend(self) -> ComputeBackend:
        """Build the configured compute backend.

        A single worker always gives ``MainProcessCompute``.
        """
        max_workers = self.threads if self.threads > 0 else None
        if self.compute is ComputeKind.MAIN or max_workers == 1:
            return MainProcessCompute()

        if self.compute is ComputeKind.MULTIPROCESS:
            return MultiprocessCompute(max_workers=max_workers)

        return ThreadedCompute(max_workers=max_workers)
