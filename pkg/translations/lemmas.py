from calculi.names import Supply, special
from calculi.terms import Term, free_vars, is_vker, names, values_of
from pi.process import check_encoding_discipline, free_names

from .cbn import encode_cbn
from .cbv import encode_cbv, encode_cbv_value


def check_free_name_lemmas(t: Term) -> bool:
    """
    fn(⟦t⟧a) = fv(t) ⊎ {a} for the CBN translation; on λ_vker terms also
    fn(⟦t⟧x) = fv(t) ⊎ {x} and fn(⟦v⟧a) = fv(v) ⊎ {a} for every value v in t.
    Every encoding must also respect the channel discipline.
    """
    a = special("a")
    p, _ = encode_cbn(t, a)
    if free_names(p) != free_vars(t) | {a} or not check_encoding_discipline(p):
        return False
    if not is_vker(t):
        return True

    x, _ = Supply().fresh_variable(names(t))
    p, _ = encode_cbv(t, x)
    if free_names(p) != free_vars(t) | {x} or not check_encoding_discipline(p):
        return False
    for v in values_of(t):
        q, _ = encode_cbv_value(v, a)
        if free_names(q) != free_vars(v) | {a} or not check_encoding_discipline(q):
            return False
    return True
