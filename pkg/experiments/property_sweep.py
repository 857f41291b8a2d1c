"""Randomized sweeps over the identities the library relies on.

    python -m experiments.property_sweep             # all sweeps
    python -m experiments.property_sweep theorem with count=200
    python -m experiments.property_sweep crypto with wrong_key_trials=100

Every sweep records one row per random instance, prints a pandas summary and
fails (exit 1) as soon as one threshold is missed.
"""
import numpy as np
from pandas import DataFrame
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds
from scipy.spatial.distance import pdist
from sys import stdout
from tqdm import tqdm

from hidproj.crypto import attack_probe, build_dictionary, check_roundtrip, \
    decode_message, decrypt, encrypt, keygen
from hidproj.errors import DecodeError, HiddenProjectorError
from hidproj.factorizations import ColumnRowSelection, cpqr_reduced, cur, \
    cur_exactness, lu_reduced, randomized_reduced, reduced_svd
from hidproj.linalg.core import CHECK_TOLERANCE, check_penrose, frobenius_norm, matmul, \
    pinv, rank_of
from hidproj.linalg.projectors import make_rng
from hidproj.linalg.solver import SolverInputs, mixing_from_pair, relative_residual, \
    sketch_inverse_pair

from .utils import FAILURE, SUCCESS, attach_observer, exit_code, report, run_and_exit

ex = Experiment('property_sweep')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)

IDENTITY_THRESHOLD = 1e-10
ROUNDTRIP_THRESHOLD = 1e-8
PROBE_DISTANCE = 1e-3
WRONG_KEY_FAILURE_RATE = 0.99

# instance streams start above the streams used for sketches
INSTANCE_STREAMS = 1 << 32


@ex.config
def cfg():
    seed = 0
    # theorem sweep instances, also used for the generalized inverse identities
    count = 1000
    max_dim = 12
    max_oversampling = 4
    penrose_count = 500
    zoo_count = 200
    # crypto
    m = 8
    k = 3
    r = 5
    q = 6
    seeds_per_symbol = 16
    keypairs = 50
    wrong_key_trials = 1000
    json_report = False


def relative_error(x, y):
    scale = frobenius_norm(y)
    return frobenius_norm(np.asarray(x) - y) / (scale if scale > 0 else 1.0)


def random_shape(rng, max_dim):
    m, n = (int(x) for x in rng.integers(1, max_dim + 1, size=2))
    return m, n, int(rng.integers(1, min(m, n) + 1))


def random_low_rank(rng, m, n, k):
    return rng.standard_normal((m, k)) @ rng.standard_normal((k, n))


def summarize(name, rows, limits):
    """Print the summary of a sweep and return (report, passed).

    `limits` maps column names to the largest admissible value.
    """
    frame = DataFrame(rows)
    print('INFO: {} sweep over {} instances'.format(name, len(frame)))
    print(frame.describe().transpose()[['mean', 'max']].to_string())
    stdout.flush()
    worst = {column: float(frame[column].max()) for column in limits}
    passed = all(worst[column] <= limit for column, limit in limits.items())
    for column, limit in limits.items():
        if worst[column] > limit:
            print('ERROR: {} reached {:.3g}, limit {:.3g}'.format(column, worst[column],
                                                                  limit))
    return {'instances': len(frame), 'worst': worst, 'passed': passed}, passed


def theorem_sweep(seed, count, max_dim, max_oversampling):
    """Factor random low-rank A through randomized F and H* with arbitrary W."""
    rows = []
    for index in tqdm(range(count), ascii=True):
        rng = make_rng(seed, INSTANCE_STREAMS + index)
        m, n, k = random_shape(rng, max_dim)
        r, q = (int(x) for x in rng.integers(k, k + max_oversampling + 1, size=2))
        a = random_low_rank(rng, m, n, k)
        f = a @ rng.standard_normal((n, r))
        h_star = rng.standard_normal((q, m)) @ a
        w = rng.standard_normal((r, q))
        pair = sketch_inverse_pair(SolverInputs(a, f, h_star), seed=index, k=k)
        # W on the scale of the particular solution Y*AX
        w *= frobenius_norm(matmul(pair.y_star, a, pair.x)) / frobenius_norm(w)
        triple = mixing_from_pair(SolverInputs(a, f, h_star, w=w), pair,
                                  max_residual=np.inf)
        column_projector = matmul(f, pair.y_star)
        row_projector = matmul(pair.x, h_star)
        # squares go through Y*F and H*X, which are orthogonal projectors
        rows.append({
            'residual': relative_residual(a, triple.reconstruct()),
            'fyf': relative_error(matmul(f, matmul(pair.y_star, f)), f),
            'hxh': relative_error(matmul(matmul(h_star, pair.x), h_star), h_star),
            'fy_idempotent': relative_error(
                matmul(f, matmul(pair.y_star, f), pair.y_star), column_projector),
            'xh_idempotent': relative_error(
                matmul(pair.x, matmul(h_star, pair.x), h_star), row_projector),
        })
    return summarize('theorem', rows, {column: IDENTITY_THRESHOLD for column in
                                       ['residual', 'fyf', 'hxh', 'fy_idempotent',
                                        'xh_idempotent']})


def penrose_sweep(seed, penrose_count, max_dim):
    rows = []
    for index in tqdm(range(penrose_count), ascii=True):
        rng = make_rng(seed, INSTANCE_STREAMS + index)
        m, n, k = random_shape(rng, max_dim)
        a = random_low_rank(rng, m, n, k)
        checks = check_penrose(a, pinv(a, rank=k))
        rows.append({'failed_equations': 4 - sum(checks)})
    return summarize('penrose', rows, {'failed_equations': 0})


def zoo_sweep(seed, zoo_count, max_dim):
    """Reconstruct random matrices with every factorization.

    CUR is run twice: with k columns and rows, which reconstructs exactly, and
    with k - 1 of them, which must not. The exactness report has to agree both
    times.
    """
    rows = []
    for index in tqdm(range(zoo_count), ascii=True):
        rng = make_rng(seed, INSTANCE_STREAMS + index)
        m, n, k = random_shape(rng, max_dim)
        a = random_low_rank(rng, m, n, k)
        square = rng.standard_normal((n, n))
        picked_cols = rng.permutation(n)[:k]
        picked_rows = rng.permutation(m)[:k]
        exact = cur(a, ColumnRowSelection(picked_cols, picked_rows))
        row = {
            'svd': relative_residual(a, reduced_svd(a, k).reconstruct()),
            'cpqr': relative_residual(a, cpqr_reduced(a).reconstruct()),
            'lu': relative_residual(square, lu_reduced(square).reconstruct()),
            'cur': relative_residual(a, exact.reconstruct()),
            'randomized': relative_residual(a, randomized_reduced(
                a, k + 2, k + 1, seed=index).reconstruct()),
            'cur_exactness_mismatch': int(not cur_exactness(a, exact).exact),
        }
        if k > 1:
            partial = cur(a, ColumnRowSelection(picked_cols[:-1], picked_rows[:-1]))
            residual = relative_residual(a, partial.reconstruct())
            reconstructs = residual <= IDENTITY_THRESHOLD
            if cur_exactness(a, partial).exact != reconstructs:
                row['cur_exactness_mismatch'] += 1
        rows.append(row)
    limits = {name: IDENTITY_THRESHOLD for name in ['svd', 'cpqr', 'lu', 'cur',
                                                    'randomized']}
    limits['cur_exactness_mismatch'] = 0
    return summarize('zoo', rows, limits)


def crypto_sweep(seed, m, k, r, q, seeds_per_symbol, keypairs, wrong_key_trials):
    dictionary = build_dictionary(m, k, seed=seed)
    symbols = bytes(range(dictionary.symbols))
    sk, pk = keygen(dictionary, r, seed)

    recovered = 0
    payloads = []
    for nonce in tqdm(range(seeds_per_symbol), ascii=True):
        c = encrypt(pk, dictionary.a, nonce)
        payloads.append(c.payload)
        decoded = decode_message(dictionary, decrypt(sk, c))
        recovered += sum(x == y for x, y in zip(decoded, symbols))
    # per symbol, no two ciphertexts coincide
    collisions = sum(int(pdist(np.stack([p[:, j] for p in payloads])).min() == 0)
                     for j in range(dictionary.symbols)) if seeds_per_symbol > 1 else 0

    sk2, pk2 = keygen(dictionary, r, seed, two_sided=True, q=q)
    two_sided_residual = check_roundtrip(sk2, pk2, dictionary.a, seed, two_sided=True)

    pairs = [keygen(dictionary, r, seed + 1 + i)
             for i in tqdm(range(keypairs), ascii=True)]
    probe_rows = []
    for pair_sk, pair_pk in pairs:
        probe = attack_probe(pair_pk, pair_sk)
        probe_rows.append({
            'rank_deficient':
                rank_of(pair_pk.y2f, CHECK_TOLERANCE).rank == pair_pk.k < pair_pk.r,
            'distance': probe.distance,
        })
    probes = DataFrame(probe_rows)

    wrong_key_failures = 0
    for trial in tqdm(range(wrong_key_trials), ascii=True):
        _, sender_pk = pairs[trial % keypairs]
        wrong_sk, _ = pairs[(trial + 1) % keypairs]
        c = encrypt(sender_pk, dictionary.a[:, trial % dictionary.symbols], trial)
        try:
            decode_message(dictionary, decrypt(wrong_sk, c))
        except DecodeError:
            wrong_key_failures += 1

    total = dictionary.symbols * seeds_per_symbol
    measurements = {
        'recovered': recovered,
        'roundtrips': total,
        'ciphertext_collisions': collisions,
        'two_sided_residual': two_sided_residual,
        'keys_rank_deficient': bool(probes['rank_deficient'].all()),
        'min_probe_distance': float(probes['distance'].min()),
        'wrong_key_failure_rate': wrong_key_failures / max(wrong_key_trials, 1),
    }
    print('INFO: crypto sweep')
    print(probes.describe().to_string())
    stdout.flush()
    passed = recovered == total and collisions == 0 \
        and two_sided_residual <= ROUNDTRIP_THRESHOLD \
        and measurements['keys_rank_deficient'] \
        and measurements['min_probe_distance'] > PROBE_DISTANCE \
        and (wrong_key_trials == 0
             or measurements['wrong_key_failure_rate'] >= WRONG_KEY_FAILURE_RATE)
    measurements['passed'] = passed
    return measurements, passed


def finish(_run, measurements, passed, json_report):
    report(_run, measurements, json_report)
    return SUCCESS if passed else FAILURE


@ex.command
def theorem(seed, count, max_dim, max_oversampling, json_report, _run):
    try:
        measurements, passed = theorem_sweep(seed, count, max_dim, max_oversampling)
    except HiddenProjectorError as e:
        return exit_code(e)
    return finish(_run, measurements, passed, json_report)


@ex.command
def penrose(seed, penrose_count, max_dim, json_report, _run):
    try:
        measurements, passed = penrose_sweep(seed, penrose_count, max_dim)
    except HiddenProjectorError as e:
        return exit_code(e)
    return finish(_run, measurements, passed, json_report)


@ex.command
def zoo(seed, zoo_count, max_dim, json_report, _run):
    try:
        measurements, passed = zoo_sweep(seed, zoo_count, max_dim)
    except HiddenProjectorError as e:
        return exit_code(e)
    return finish(_run, measurements, passed, json_report)


@ex.command
def crypto(seed, m, k, r, q, seeds_per_symbol, keypairs, wrong_key_trials, json_report,
           _run):
    try:
        measurements, passed = crypto_sweep(seed, m, k, r, q, seeds_per_symbol, keypairs,
                                            wrong_key_trials)
    except HiddenProjectorError as e:
        return exit_code(e)
    return finish(_run, measurements, passed, json_report)


@ex.main
def all_sweeps(seed, count, max_dim, max_oversampling, penrose_count, zoo_count, m, k, r,
               q, seeds_per_symbol, keypairs, wrong_key_trials, json_report, _run):
    try:
        results = {
            'theorem': theorem_sweep(seed, count, max_dim, max_oversampling),
            'penrose': penrose_sweep(seed, penrose_count, max_dim),
            'zoo': zoo_sweep(seed, zoo_count, max_dim),
            'crypto': crypto_sweep(seed, m, k, r, q, seeds_per_symbol, keypairs,
                                   wrong_key_trials),
        }
    except HiddenProjectorError as e:
        return exit_code(e)
    measurements = {name: result[0] for name, result in results.items()}
    return finish(_run, measurements, all(result[1] for result in results.values()),
                  json_report)


if __name__ == '__main__':
    run_and_exit(ex)
