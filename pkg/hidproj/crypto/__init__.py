from .dictionary import Dictionary, TEXT_SYMBOLS, build_dictionary, load_dictionary, \
    decode_symbol, decode_message, encode_message
from .keys import SecretKey, PublicKey, ProbeReport, keygen, derive_public_key, \
    attack_probe
from .cipher import Ciphertext, encrypt, decrypt, encrypt2, decrypt2, check_roundtrip
