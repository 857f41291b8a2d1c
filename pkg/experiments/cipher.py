"""Encrypt and decrypt byte streams, one dictionary column per byte.

    python -m experiments.cipher encrypt with public_path=pk.json dict_path=dict.csv \
        in_path=msg.txt seed=3 out_path=c.json
    python -m experiments.cipher decrypt with secret_path=sk.json dict_path=dict.csv \
        in_path=c.json out_path=msg.out
"""
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds
from sys import stdout

from hidproj.crypto import decode_message, decrypt as decrypt_block, \
    encode_message, encrypt as encrypt_block
from hidproj.errors import DimensionError, HiddenProjectorError
from hidproj.serialization import read_ciphertext, read_dictionary, read_public_key, \
    read_secret_key, write_ciphertext

from .utils import SUCCESS, UsageError, attach_observer, exit_code, report, require, \
    run_and_exit

ex = Experiment('cipher')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)


@ex.config
def cfg():
    public_path = None
    secret_path = None
    dict_path = None
    # message file for encrypt, ciphertext file for decrypt
    in_path = None
    # encrypt a single dictionary column (the symbol's byte value) instead of in_path
    column = None
    seed = 0
    # ciphertext file for encrypt; for decrypt, the message is printed when unset
    out_path = None
    json_report = False


@ex.command
def encrypt(public_path, dict_path, in_path, column, seed, out_path, json_report, _run):
    try:
        require(public_path=public_path, dict_path=dict_path, out_path=out_path)
        pk = read_public_key(public_path)
        dictionary = read_dictionary(dict_path)
        if column is not None:
            data = bytes([column])
        else:
            require(in_path=in_path)
            with open(in_path, 'rb') as f:
                data = f.read()
        if pk.y1.shape[1] != dictionary.shape[0]:
            raise DimensionError('ERROR: public key expects {} rows, dictionary has '
                                 '{}'.format(pk.y1.shape[1], dictionary.shape[0]))
        ciphertext = encrypt_block(pk, encode_message(dictionary, data), seed)
        write_ciphertext(out_path, ciphertext)
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)
    except (TypeError, ValueError) as e:
        # bytes([column]) for a column outside 0..255
        return exit_code(UsageError('invalid column {!r}: {}'.format(column, e)))

    report(_run, {'length': ciphertext.length, 'r': pk.r}, json_report)
    return SUCCESS


@ex.command
def decrypt(secret_path, dict_path, in_path, out_path, json_report, _run):
    try:
        require(secret_path=secret_path, dict_path=dict_path, in_path=in_path)
        sk = read_secret_key(secret_path)
        dictionary = read_dictionary(dict_path)
        ciphertext = read_ciphertext(in_path)
        data = decode_message(dictionary, decrypt_block(sk, ciphertext))
        if out_path is not None:
            with open(out_path, 'wb') as f:
                f.write(data)
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)

    if out_path is None:
        stdout.write(data.decode('utf8', errors='replace') + '\n')
    report(_run, {'length': len(data)}, json_report)
    return SUCCESS


if __name__ == '__main__':
    run_and_exit(ex)
