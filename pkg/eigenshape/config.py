from typing import Optional

from pydantic import BaseSettings


class Settings(BaseSettings):
    """Configuration management, can be derived from ENV of .env file.

    Every field is read from the environment with the ``EIGENSHAPE_`` prefix,
    e.g. ``EIGENSHAPE_THREADS=4``.
    """

    THREADS: Optional[int] = None
    LOG_LEVEL: str = "WARNING"
    DENSE_EIGEN_THRESHOLD: int = 600

    class Config:
        env_prefix = "EIGENSHAPE_"


settings = Settings()
