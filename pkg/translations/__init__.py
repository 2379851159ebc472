from .cbn import DEFAULT_CHANNEL, encode_cbn
from .cbv import encode_cbv, encode_cbv_value
from .lemmas import check_free_name_lemmas
