from pydantic import BaseModel, ConfigDict


class _Base(BaseModel):
    """Shared config for file, report and descriptor models"""

    model_config = ConfigDict(extra="forbid", use_enum_values=False)
