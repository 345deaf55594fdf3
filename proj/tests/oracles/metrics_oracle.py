"""Per-position DER/WER oracle for tests/data/metrics_fixture.tsv.

Independent of the C++ implementation: it walks codepoints directly and
prints the four-variant counts that tests/metrics_test.cc freezes.
With --rates it prints DER and WER per pair and variant instead, plus a
micro-averaged "corpus" row; that output is tests/data/metrics_expected.tsv.
"""
import sys

MARKS = set(range(0x064B, 0x0653))
SHADDA = 0x0651

def is_letter(c):
    o = ord(c)
    return (0x0621 <= o <= 0x064A and o != 0x0640) or o == 0x0671

def units(word):
    out = []
    for ch in word:
        if is_letter(ch):
            out.append([False, None])
        elif ord(ch) in MARKS and out:
            if ord(ch) == SHADDA:
                out[-1][0] = True
            else:
                out[-1][1] = ord(ch)
    return [tuple(u) for u in out]

def counts(ref, hyp, case_ending, include_nd):
    cc = wc = cw = ww = 0
    for rw, hw in zip(ref.split(), hyp.split()):
        ru, hu = units(rw), units(hw)
        if not ru:
            continue
        counted = wrong = 0
        for i, (r, h) in enumerate(zip(ru, hu)):
            if not case_ending and i == len(ru) - 1:
                continue
            if not include_nd and r == (False, None):
                continue
            counted += 1
            wrong += r != h
        cc += counted; wc += wrong
        if counted:
            cw += 1; ww += wrong > 0
    return cc, wc, cw, ww

variants = [(True, True), (True, False), (False, True), (False, False)]  # (incl_nd, ce)
labels = ["incl_ce", "incl_noce", "excl_ce", "excl_noce"]

def rate(wrong, counted):
    return 100.0 * wrong / counted if counted else 0.0

rates = "--rates" in sys.argv[1:]
path = [a for a in sys.argv[1:] if not a.startswith("--")][0]
total = [[0, 0, 0, 0] for _ in variants]
if rates:
    print("# id\tvariant\tder\twer")
for line in open(path, encoding="utf-8"):
    if line.startswith("#") or not line.strip():
        continue
    pid, ref, hyp = line.rstrip("\n").split("\t")
    row = [counts(ref, hyp, ce, nd) for nd, ce in variants]
    if not rates:
        print(pid, " ".join("%d/%d/%d/%d" % r for r in row))
        continue
    for v, r in enumerate(row):
        total[v] = [a + b for a, b in zip(total[v], r)]
        print("%s\t%s\t%.4f\t%.4f" % (pid, labels[v], rate(r[1], r[0]), rate(r[3], r[2])))
if rates:
    for v, r in enumerate(total):
        print("corpus\t%s\t%.4f\t%.4f" % (labels[v], rate(r[1], r[0]), rate(r[3], r[2])))
