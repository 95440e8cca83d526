from pydantic_settings import BaseSettings, SettingsConfigDict

from dotenv import load_dotenv

load_dotenv()  # load .env file


class Settings(BaseSettings):
    # blocks with rows*cols at or below this are eliminated densely with numpy
    DENSE_BUDGET: int = 4_000_000
    # cap on the projected stored entries of one assembled matrix
    MATRIX_BUDGET: int = 200_000_000
    ALLOW_SMALL_P: bool = False
    BINOMIAL_BIT_CAP: int = 4096
    MAX_PRIME: int = 1 << 20
    COKERNEL_SAMPLE: int = 20
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="KODAIRA_", extra="ignore")


settings = Settings()


def get_settings() -> Settings:
    """Return the process-wide settings instance"""
    return settings
