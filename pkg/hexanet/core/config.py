from pydantic_settings import BaseSettings
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    PROJECT_NAME: str = "Hexanet"
    VERSION: str = "1.0.0"

    # Enumeration bound for tilings, flip searches and positive sampling
    HEXANET_MAX_N: int = 6
    SYMBOLIC_MAX_N: int = 5
    SCHRODER_MAX_N: int = 12

    # Random generic matrices: entries p/q with |p| <= 20, 1 <= q <= 5
    ENTRY_NUMERATOR_BOUND: int = 20
    ENTRY_DENOMINATOR_BOUND: int = 5
    RESAMPLE_BUDGET: int = 200

    CORRESPONDENCE_SAMPLES: int = 25

    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"


settings = Settings()
