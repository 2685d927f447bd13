from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Dict, Optional


class Settings(BaseSettings):
    # Logging settings
    LOG_LEVEL: str = Field(default="INFO")
    LOG_DIR: Optional[str] = Field(default=None)  # rotating JSON log file when set

    # Report cache (disabled unless a directory is given)
    REPORT_CACHE_DIR: Optional[str] = Field(default=None)

    # Sweep runner
    SWEEP_WORKERS: int = Field(default=4, ge=1)

    # Exact-oracle budgets
    TW_MAX_VERTICES: int = Field(default=14, ge=0)
    BW_MAX_EDGES: int = Field(default=12, ge=0)
    SEP_MAX_VERTICES: int = Field(default=10, ge=0)
    SEP_GUIDED_MAX_VERTICES: int = Field(default=16, ge=0)
    LINK_MAX_VERTICES: int = Field(default=10, ge=0)
    WL_MAX_VERTICES: int = Field(default=9, ge=0)
    HAD_MAX_VERTICES: int = Field(default=10, ge=0)
    HAD_F_MAX_VERTICES: int = Field(default=6, ge=0)
    SUBSET_ENUMERATION_LIMIT: int = Field(default=200_000, ge=1)

    # Pydantic v2 config
    model_config = SettingsConfigDict(
        env_prefix="TIEDWIDTH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",  # Ignore extra env vars
        case_sensitive=True,
    )


class Budget(BaseModel):
    """Per-operation size limits for the exponential oracles."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tw_vertices: int = 14
    bw_edges: int = 12
    sep_vertices: int = 10
    sep_guided_vertices: int = 16
    link_vertices: int = 10
    wl_vertices: int = 9
    had_vertices: int = 10
    had_f_vertices: int = 6
    subset_enumeration: int = 200_000

    @classmethod
    def from_settings(cls, source: Optional[Settings] = None) -> "Budget":
        source = source or settings
        return cls(
            tw_vertices=source.TW_MAX_VERTICES,
            bw_edges=source.BW_MAX_EDGES,
            sep_vertices=source.SEP_MAX_VERTICES,
            sep_guided_vertices=source.SEP_GUIDED_MAX_VERTICES,
            link_vertices=source.LINK_MAX_VERTICES,
            wl_vertices=source.WL_MAX_VERTICES,
            had_vertices=source.HAD_MAX_VERTICES,
            had_f_vertices=source.HAD_F_MAX_VERTICES,
            subset_enumeration=source.SUBSET_ENUMERATION_LIMIT,
        )

    def with_overrides(self, overrides: Dict[str, int]) -> "Budget":
        unknown = set(overrides) - set(type(self).model_fields)
        if unknown:
            raise ValueError(f"unknown budget keys: {sorted(unknown)}")
        return self.model_copy(update=overrides)


def resolve_budget(budget: Optional[Budget]) -> Budget:
    return budget if budget is not None else Budget.from_settings()


# Initialize settings
settings = Settings()
