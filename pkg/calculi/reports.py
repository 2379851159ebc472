from pydantic import BaseModel, ConfigDict, Field


class Report(BaseModel):
    """Base of every machine-readable report; serialized with a `"schema": 1` field."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")

    def to_dict(self) -> dict:
        return self.model_dump(by_alias=True)

    def to_json(self, indent: int = 4) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)
