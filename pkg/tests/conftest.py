"""Shared cached builders so expensive systems are constructed once."""

from functools import lru_cache

from lkrep import KrammerRep, RootSystem, TypeSpec


@lru_cache(maxsize=None)
def rsys(family: str, rank: int) -> RootSystem:
    return RootSystem.build(TypeSpec(family, rank))


@lru_cache(maxsize=None)
def rep(family: str, rank: int) -> KrammerRep:
    return KrammerRep(rsys(family, rank))
