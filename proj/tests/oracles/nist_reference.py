# Copyright 2026 The pqrng Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent NumPy/SciPy evaluation of the randomness test p-values.

Generates the SplitMix64 reference stream used by randtests_test.cpp and
prints p-values for each test. The C++ suite freezes these numbers.
"""
import math
import sys

import numpy as np
from scipy.special import erfc, gammaincc

MASK = (1 << 64) - 1


def splitmix_bits(seed, n):
    state = seed
    out = []
    while len(out) < n:
        state = (state + 0x9E3779B97F4A7C15) & MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        z ^= z >> 31
        out.extend((z >> (63 - k)) & 1 for k in range(64))
    return np.array(out[:n], dtype=np.int64)


def frequency(e):
    s = np.sum(2 * e - 1)
    return erfc(abs(s) / math.sqrt(len(e)) / math.sqrt(2))


def block_frequency(e, m):
    nb = len(e) // m
    pi = e[: nb * m].reshape(nb, m).mean(axis=1)
    chi2 = 4 * m * np.sum((pi - 0.5) ** 2)
    return gammaincc(nb / 2, chi2 / 2)


def runs(e):
    n = len(e)
    pi = e.mean()
    v = 1 + np.count_nonzero(e[1:] != e[:-1])
    return erfc(abs(v - 2 * n * pi * (1 - pi)) / (2 * math.sqrt(2 * n) * pi * (1 - pi)))


def longest_run(e):
    n = len(e)
    if n < 6272:
        m, k, v, pis = 8, 3, [1, 2, 3, 4], [0.21484375, 0.3671875, 0.23046875, 0.1875]
    elif n < 750000:
        m, k, v = 128, 5, [4, 5, 6, 7, 8, 9]
        pis = [0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847]
    else:
        m, k, v = 10000, 6, [10, 11, 12, 13, 14, 15, 16]
        pis = [0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727]
    nb = n // m
    counts = np.zeros(k + 1)
    for b in range(nb):
        block = e[b * m:(b + 1) * m]
        best = run = 0
        for bit in block:
            run = run + 1 if bit else 0
            best = max(best, run)
        idx = min(max(best, v[0]), v[-1]) - v[0]
        counts[idx] += 1
    chi2 = np.sum((counts - nb * np.array(pis)) ** 2 / (nb * np.array(pis)))
    return gammaincc(k / 2, chi2 / 2)


def cusum(e, reverse):
    from scipy.stats import norm
    x = 2 * e - 1
    if reverse:
        x = x[::-1]
    z = np.max(np.abs(np.cumsum(x)))
    n = len(e)
    sq = math.sqrt(n)
    s1 = 0.0
    for k in range(int((-n / z + 1) / 4), int((n / z - 1) / 4) + 1):
        s1 += norm.cdf((4 * k + 1) * z / sq) - norm.cdf((4 * k - 1) * z / sq)
    s2 = 0.0
    for k in range(int((-n / z - 3) / 4), int((n / z - 1) / 4) + 1):
        s2 += norm.cdf((4 * k + 3) * z / sq) - norm.cdf((4 * k + 1) * z / sq)
    return 1 - s1 + s2


def dft(e):
    n = len(e)
    x = 2 * e - 1
    mags = np.abs(np.fft.fft(x))[: n // 2]
    t = math.sqrt(math.log(1 / 0.05) * n)
    n0 = 0.95 * n / 2
    n1 = np.count_nonzero(mags < t)
    d = (n1 - n0) / math.sqrt(n * 0.95 * 0.05 / 4)
    return erfc(abs(d) / math.sqrt(2))


def psi2(e, m):
    if m <= 0:
        return 0.0
    n = len(e)
    ext = np.concatenate([e, e[: m - 1]])
    idx = np.zeros(n, dtype=np.int64)
    for j in range(m):
        idx = (idx << 1) | ext[j:j + n]
    counts = np.bincount(idx, minlength=1 << m).astype(float)
    return (1 << m) / n * np.sum(counts ** 2) - n


def serial(e, m):
    p0, p1, p2 = psi2(e, m), psi2(e, m - 1), psi2(e, m - 2)
    d1 = p0 - p1
    d2 = p0 - 2 * p1 + p2
    return gammaincc(2 ** (m - 2), d1 / 2), gammaincc(2 ** (m - 3), d2 / 2)


def phi(e, m):
    if m == 0:
        return 0.0
    n = len(e)
    ext = np.concatenate([e, e[: m - 1]])
    idx = np.zeros(n, dtype=np.int64)
    for j in range(m):
        idx = (idx << 1) | ext[j:j + n]
    c = np.bincount(idx, minlength=1 << m) / n
    c = c[c > 0]
    return float(np.sum(c * np.log(c)))


def apen(e, m):
    n = len(e)
    ap = phi(e, m) - phi(e, m + 1)
    chi2 = 2 * n * (math.log(2) - ap)
    return gammaincc(2 ** (m - 1), chi2 / 2)


def gf2_rank(mat):
    mat = mat.copy() % 2
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if mat[i, c]:
                piv = i
                break
        if piv is None:
            continue
        mat[[r, piv]] = mat[[piv, r]]
        for i in range(rows):
            if i != r and mat[i, c]:
                mat[i] ^= mat[r]
        r += 1
    return r


def rank_probability(r, m=32, q=32):
    prod = 1.0
    for i in range(r):
        prod *= (1 - 2.0 ** (i - q)) * (1 - 2.0 ** (i - m)) / (1 - 2.0 ** (i - r))
    return 2.0 ** (r * (q + m - r) - m * q) * prod


def rank(e):
    nm = len(e) // 1024
    full = minus1 = 0
    for k in range(nm):
        r = gf2_rank(e[k * 1024:(k + 1) * 1024].reshape(32, 32))
        full += r == 32
        minus1 += r == 31
    rest = nm - full - minus1
    p = [rank_probability(32), rank_probability(31)]
    p.append(1 - p[0] - p[1])
    chi2 = ((full - p[0] * nm) ** 2 / (p[0] * nm) + (minus1 - p[1] * nm) ** 2 / (p[1] * nm)
            + (rest - p[2] * nm) ** 2 / (p[2] * nm))
    return math.exp(-chi2 / 2)


def template(e, tpl, nblocks=8):
    m = len(tpl)
    n = len(e)
    bl = n // nblocks
    mu = (bl - m + 1) / 2 ** m
    var = bl * (1 / 2 ** m - (2 * m - 1) / 2 ** (2 * m))
    chi2 = 0.0
    for b in range(nblocks):
        blk = e[b * bl:(b + 1) * bl]
        w = 0
        i = 0
        while i <= bl - m:
            if all(blk[i + j] == tpl[j] for j in range(m)):
                w += 1
                i += m
            else:
                i += 1
        chi2 += (w - mu) ** 2 / var
    return gammaincc(nblocks / 2, chi2 / 2)


UNIVERSAL = {6: (5.2177052, 2.954), 7: (6.1962507, 3.125), 8: (7.1836656, 3.238),
             9: (8.1764248, 3.311), 10: (9.1723243, 3.356), 11: (10.170032, 3.384),
             12: (11.168765, 3.401), 13: (12.168070, 3.410), 14: (13.167693, 3.416),
             15: (14.167488, 3.419), 16: (15.167379, 3.421)}


def universal(e):
    n = len(e)
    bounds = [387840, 904960, 2068480, 4654080, 10342400, 22753280, 49643520,
              107560960, 231669760, 496435200, 1059061760]
    L = 5
    for k, b in enumerate(bounds):
        if n >= b:
            L = 6 + k
    Q = 10 * 2 ** L
    K = n // L - Q
    table = {}
    words = []
    for i in range(n // L):
        w = 0
        for j in range(L):
            w = (w << 1) | int(e[i * L + j])
        words.append(w)
    for i in range(Q):
        table[words[i]] = i + 1
    s = 0.0
    for i in range(Q, Q + K):
        s += math.log2(i + 1 - table.get(words[i], 0))
        table[words[i]] = i + 1
    fn = s / K
    expected, variance = UNIVERSAL[L]
    c = 0.7 - 0.8 / L + (4 + 32 / L) * K ** (-3 / L) / 15
    sigma = c * math.sqrt(variance / K)
    return erfc(abs(fn - expected) / (math.sqrt(2) * sigma))


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 400000
    e = splitmix_bits(2024, n)
    lg = int(math.floor(math.log2(n)))
    m_bf = max(20, -(-n // 100))
    m_serial = min(max(lg - 2, 2), 16)
    m_apen = min(max(lg - 5, 1), 10)
    print(f"n={n} ones={int(e.sum())} M={m_bf} serial_m={m_serial} apen_m={m_apen}")
    print("frequency", repr(frequency(e)))
    print("block_frequency", repr(block_frequency(e, m_bf)))
    print("runs", repr(runs(e)))
    print("longest_run", repr(longest_run(e)))
    print("cusum", repr(cusum(e, False)), repr(cusum(e, True)))
    print("dft", repr(dft(e)))
    print("serial", *map(repr, serial(e, m_serial)))
    print("apen", repr(apen(e, m_apen)))
    print("rank", repr(rank(e)))
    print("template", repr(template(e, [0] * 8 + [1])))
    if n >= 387840:
        print("universal", repr(universal(e)))


if __name__ == "__main__":
    main()
