#!/usr/bin/env python3
"""Regenerates the bundled sample corpus under data/sample/.

The corpus is synthetic but structured like real evaluation input: a small
taxonomy (3 disciplines, 6 fields), 230 professors across 8 universities,
and ~500 publications with mixed internal/external authorship. One field
(BIO/10) deliberately contains a three-way productivity tie right at the
top-decile boundary so that tie inclusion is observable end to end.

Deterministic: fixed seed, sorted output. Run from the repo root:

    python3 tools/make_sample_corpus.py
"""

import csv
import math
import os
import random
from datetime import date

SEED = 20160413
OUT = os.path.join(os.path.dirname(__file__), "..", "data", "sample")

UDAS = [
    ("UDA1", "Mathematics and computer sciences"),
    ("UDA5", "Biology"),
    ("UDA6", "Medicine"),
]

# sds_code, sds_name, uda_code, credit_scheme, headcount, category pool
SDSS = [
    ("MAT/02", "Algebra", "UDA1", "EQUAL", 30, ["Mathematics"]),
    ("MAT/05", "Mathematical analysis", "UDA1", "EQUAL", 40, ["Mathematics", "Mathematics Applied"]),
    ("INF/01", "Computer science", "UDA1", "EQUAL", 35, ["Computer Science"]),
    ("BIO/10", "Biochemistry", "UDA5", "POSITIONAL", 20, ["Biochemistry"]),
    ("BIO/11", "Molecular biology", "UDA5", "POSITIONAL", 45, ["Molecular Biology", "Biochemistry"]),
    ("MED/01", "Medical statistics", "UDA6", "POSITIONAL", 60, ["Medicine General", "Oncology"]),
]

UNIS = ["U01", "U02", "U03", "U04", "U05", "U06", "U07", "U08"]
# Assignment weights: big universities first, two deliberately small ones
# (U07, U08) that fall under the staff filters in most scopes.
UNI_WEIGHTS = {
    "UDA1": [22, 20, 16, 14, 12, 12, 3, 6],
    "UDA5": [18, 16, 16, 14, 12, 16, 5, 3],
    "UDA6": [20, 22, 18, 16, 12, 6, 4, 2],
}

WINDOW = (date(2009, 1, 1), date(2013, 12, 31))


def years_active(start, end):
    lo = max(start, WINDOW[0])
    hi = min(end or WINDOW[1], WINDOW[1])
    if lo > hi:
        return 0.0
    return round(((hi - lo).days + 1) / 365.25, 2)


def main():
    rng = random.Random(SEED)
    professors = []  # (pid, uni, sds, start, end)
    pid = 0
    tie_ids = {}
    for sds_code, _, uda, _, count, _ in SDSS:
        weights = UNI_WEIGHTS[uda]
        for k in range(count):
            pid += 1
            p = f"P{pid:04d}"
            uni = rng.choices(UNIS, weights=weights)[0]
            r = rng.random()
            if r < 0.78:
                start = date(rng.randint(1995, 2008), rng.choice([1, 3, 9, 10]), 1)
                end = None
            elif r < 0.90:
                start = date(2011, 1, 1)
                end = None
            else:
                start = date(rng.randint(1998, 2006), rng.choice([1, 9]), 1)
                end = date(2012, 6, 30) if rng.random() < 0.5 else None
            if sds_code == "BIO/10" and k in (0, 1, 2, 3):
                # engineered top block: one leader plus a three-way tie
                start, end = date(2001, 3, 1), None
                tie_ids[k] = p
            professors.append((p, uni, sds_code, start, end))

    prof_by_sds = {}
    for rec in professors:
        prof_by_sds.setdefault(rec[2], []).append(rec)

    unproductive = set()
    for rec in professors:
        if rec[0] in tie_ids.values():
            continue
        if rng.random() < 0.09:
            unproductive.add(rec[0])

    pubs = []     # (pub_id, year, citations, [categories])
    auths = []    # (pub_id, position, professor_id, university_id)
    pub_no = 0
    uni_of = {p: u for p, u, _, _, _ in professors}

    def add_pub(year, citations, categories, authors):
        # authors: list of (professor_id or "", university_id or "")
        nonlocal pub_no
        pub_no += 1
        pub = f"W{pub_no:05d}"
        pubs.append((pub, year, citations, categories))
        for pos, (who, uni) in enumerate(authors, start=1):
            auths.append((pub, pos, who, uni))
        return pub

    def citation_count():
        if rng.random() < 0.25:
            return 0
        return min(60, int(rng.expovariate(1 / 7.0)) + 1)

    # Engineered BIO/10 block: leader with two strong papers, then three
    # professors with one identical sole-author paper each (same year,
    # category and citation count, same employment interval -> same score).
    leader = tie_ids[0]
    add_pub(2010, 50, ["Biochemistry"], [(leader, uni_of[leader])])
    add_pub(2011, 40, ["Biochemistry"], [(leader, uni_of[leader])])
    for k in (1, 2, 3):
        p = tie_ids[k]
        add_pub(2010, 40, ["Biochemistry"], [(p, uni_of[p])])

    for sds_code, _, uda, scheme, _, cats in SDSS:
        roster = prof_by_sds[sds_code]
        for rec in roster:
            p = rec[0]
            if p in unproductive or p in tie_ids.values():
                continue
            n_pubs = rng.randint(1, 5)
            for _ in range(n_pubs):
                year = rng.randint(2009, 2013)
                cites = citation_count()
                if sds_code == "BIO/10":
                    cites = min(cites, 12)  # keep the engineered block on top
                k_cats = 1 if len(cats) == 1 or rng.random() < 0.7 else 2
                categories = rng.sample(cats, k_cats)
                others = rng.randint(0, 5)
                coauthors = []
                pool = [r for r in roster if r[0] != p and r[0] not in tie_ids.values()]
                for _ in range(others):
                    r = rng.random()
                    if r < 0.55 and pool:
                        mate = rng.choice(pool)
                        coauthors.append((mate[0], mate[1]))
                    elif r < 0.8:
                        coauthors.append(("", f"EXT{rng.randint(1, 40):02d}"))
                    else:
                        coauthors.append(("", ""))  # unknown external
                slots = [(p, uni_of[p])] + coauthors
                rng.shuffle(slots)
                add_pub(year, cites, sorted(categories), slots)

    # deterministic output order
    professors.sort(key=lambda r: r[0])
    pubs.sort(key=lambda r: r[0])
    auths.sort(key=lambda r: (r[0], r[1]))

    os.makedirs(OUT, exist_ok=True)

    def write(name, header, rows):
        with open(os.path.join(OUT, name), "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)

    write("taxonomy.csv", ["sds_code", "sds_name", "uda_code", "uda_name", "credit_scheme"],
          [(c, n, u, dict(UDAS)[u], s) for c, n, u, s, _, _ in SDSS])
    write("roster.csv", ["professor_id", "university_id", "sds_code", "start_date", "end_date"],
          [(p, u, s, a.isoformat(), b.isoformat() if b else "") for p, u, s, a, b in professors])
    write("publications.csv", ["pub_id", "year", "citations", "categories"],
          [(i, y, c, "|".join(cs)) for i, y, c, cs in pubs])
    write("authorships.csv", ["pub_id", "position", "professor_id", "university_id"], auths)

    self_check(professors, pubs, auths)
    print(f"wrote {len(professors)} professors, {len(pubs)} publications to {os.path.normpath(OUT)}")


def self_check(professors, pubs, auths):
    """Recompute scores directly from the files' content and assert the
    structural properties the test suite relies on."""
    cell = {}
    for _, y, c, cats in pubs:
        if c > 0:
            for cat in cats:
                s, n = cell.get((y, cat), (0, 0))
                cell[(y, cat)] = (s + c, n + 1)
    baseline = {k: s / n for k, (s, n) in cell.items()}

    by_pub = {}
    for pub, pos, who, uni in auths:
        by_pub.setdefault(pub, []).append((pos, who, uni))
    scheme_of = {c: s for c, _, _, s, _, _ in SDSS}
    uni_of = {p: u for p, u, _, _, _ in professors}
    sds_of = {p: s for p, _, s, _, _ in professors}

    def fraction(slots, who, scheme):
        n = len(slots)
        if scheme == "EQUAL":
            return 1.0 / n
        first, last = slots[0], slots[-1]
        intra = first[2] and last[2] and first[2] == last[2]
        w = [0.0] * n
        if intra:
            roles = {0: 0.40, n - 1: 0.40}
            pool = 0.20
        else:
            roles = {0: 0.30, n - 1: 0.30}
            for idx, wt in ((1, 0.15), (n - 2, 0.15)):
                if 0 <= idx < n and idx not in roles:
                    roles[idx] = wt
            pool = 0.10
        middle = [i for i in range(n) if i not in roles]
        for i, wt in roles.items():
            w[i] = wt
        if middle:
            for i in middle:
                w[i] = pool / len(middle)
        else:
            t = sum(w)
            w = [x / t for x in w]
        pos = next(i for i, s in enumerate(sorted(slots)) if s[1] == who)
        return w[pos]

    fss = {p: 0.0 for p, *_ in professors}
    for pub, y, c, cats in pubs:
        slots = sorted(by_pub[pub])
        norm = 0.0 if c == 0 else c / (sum(baseline[(y, k)] for k in cats) / len(cats))
        for _, who, _ in slots:
            if who:
                fss[who] += norm * fraction(slots, who, scheme_of[sds_of[who]])
    for p, _, _, a, b in professors:
        t = years_active(a, b)
        assert t > 0, f"{p} not active in window"
        fss[p] /= t

    total_ts = 0
    for sds_code, *_ in SDSS:
        members = sorted((p for p in fss if sds_of[p] == sds_code),
                         key=lambda p: (-fss[p], p))
        n = len(members)
        values = [fss[p] for p in members]
        ranks, ts = [], []
        for i, v in enumerate(values):
            ranks.append(ranks[i - 1] if i and v == values[i - 1] else i + 1)
        boundary_ties = 0
        for p, r in zip(members, ranks):
            pct = 100.0 * (n - r) / (n - 1)
            if pct >= 90.0 and fss[p] > 0:
                ts.append(p)
        total_ts += len(ts)
        if sds_code == "BIO/10":
            assert ranks[:5] == [1, 2, 2, 2, 5], f"tie block broken: {ranks[:6]}"
            assert len(ts) == 4, f"expected 4 top scientists in BIO/10, got {len(ts)}"
    n_all = len(professors)
    assert total_ts > math.floor(0.10 * n_all), (total_ts, n_all)

    # enough large cells for the scoped rankings
    for uda in ("UDA1", "UDA5", "UDA6"):
        sizes = {}
        for p, u, s, *_ in professors:
            if dict((c, ud) for c, _, ud, *_ in SDSS)[s] == uda:
                sizes[u] = sizes.get(u, 0) + 1
        assert sum(1 for v in sizes.values() if v >= 10) >= 3, (uda, sizes)
    print(f"self-check ok: national top scientists {total_ts} of {n_all} "
          f"(> {math.floor(0.10 * n_all)})")


if __name__ == "__main__":
    main()
