from typing import Optional

from pydantic import BaseModel, computed_field

from calculi.reports import Report


class DerivedRuleReport(Report):
    # None when the side condition of that item does not hold
    merge_par: Optional[bool] = None
    drop_nu: Optional[bool] = None
    push_nu: Optional[bool] = None

    @computed_field
    @property
    def ok(self) -> bool:
        return all(v is not False for v in (self.merge_par, self.drop_nu, self.push_nu))


class KindComparison(BaseModel):
    kind: str
    distance: list[str]
    classic: list[str]
    equal: bool


class HarmonyReport(Report):
    process: str
    depth: int
    strict: bool
    kinds: list[KindComparison]

    @computed_field
    @property
    def ok(self) -> bool:
        return all(k.equal for k in self.kinds)
