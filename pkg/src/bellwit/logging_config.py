
from loguru import logger


logger.disable("bellwit")

