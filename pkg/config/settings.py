from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    """Enumeration guards and defaults; every field can be set as CHROMA_<FIELD>"""
    max_d: int = 10
    max_perms: int = 3628800
    max_colorings: int = 10 ** 8
    max_orientation_edges: int = 25
    max_monomial_d: int = 8
    max_monomial_n: int = 8
    max_complex_d: int = 8
    max_iso_vertices: int = 64
    workers: int = 1
    seed: int = 2024
    config_path: str = "config/chroma_config.yaml"

    model_config = SettingsConfigDict(
        env_prefix="CHROMA_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()
