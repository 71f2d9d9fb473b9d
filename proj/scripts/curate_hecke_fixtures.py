#!/usr/bin/env python3
# Copyright 2026 The autexcl Authors
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

"""Regenerates the Hecke datasets under fixtures/hecke/.

Needs PARI/GP through the `cypari` wheel (pip install cypari). The C++ build
never calls this; the generated files are checked in.

For every newform orbit of S_2(Gamma_0(level))^new we record the
characteristic polynomial over Q of a_ell on the orbit, i.e. the norm form
prod_sigma (t - sigma(a_ell)), together with the Fricke (w_level) eigenvalue.
"""

import argparse
import pathlib
import sys

from cypari import pari

X0PLUS = {163: 6, 193: 7, 197: 6, 211: 6, 223: 6, 227: 5, 229: 7, 269: 6,
          331: 11, 347: 10, 359: 6, 383: 8, 389: 11, 431: 8, 461: 12,
          563: 15, 571: 19, 607: 19}

# p -> (ell, genus of X_ns(p), genus of X_ns^+(p))
CARTAN = {13: (3, 8, 3), 17: (2, 15, 6), 19: (5, 20, 8), 23: (2, 31, 13),
          29: (5, 54, 24), 31: (2, 63, 28)}

# split Cartan: p -> ell (smallest prime split in Q(sqrt(p*)))
SPLIT = {17: 2, 19: 5, 23: 2, 29: 5, 31: 2}


def orbits(level, ell):
    mf = pari(f"mfinit([{level},2,1],0)")
    forms = pari("mfeigenbasis")(mf)
    fields = pari("mffields")(mf)
    signs = pari("mfatkineigenvalues")(mf, level)
    out = []
    for i, form in enumerate(forms):
        a = pari("mfcoef")(form, ell)
        field = fields[i]
        if int(pari("poldegree")(field)) > 1:
            h = pari("charpoly")(pari("Mod")(a, field))
        else:
            h = pari(f"x - ({a})")
        coeffs = [int(c) for c in pari("Vecrev")(h)]
        out.append({"label": f"pari:{level}.2.a:o{i + 1}",
                    "level": level, "al": int(signs[i][0]), "h": coeffs})
    return out


def header(curve_id, desc, queries):
    lines = [f"# {curve_id}: {desc}",
             f"# generated by scripts/curate_hecke_fixtures.py with PARI/GP "
             f"{'.'.join(str(int(v)) for v in pari.version())}",
             "# per level L the GP calls were:",
             "#   mf = mfinit([L,2,1],0); F = mfeigenbasis(mf);",
             "#   K = mffields(mf); w = mfatkineigenvalues(mf, L);",
             "#   h_i = charpoly(Mod(mfcoef(F[i], ell), K[i]))",
             "# labels are pari:<level>.2.a:o<i>, i = index in mfeigenbasis "
             "order (opaque)"]
    lines += [f"# query: {q}" for q in queries]
    return lines


def render(curve_id, desc, genus, ell, k, records, queries):
    total = sum(len(r["h"]) - 1 for r in records)
    if total != genus:
        sys.exit(f"{curve_id}: genus {total} from forms, expected {genus}")
    lines = header(curve_id, desc, queries)
    lines += [f"curve_id={curve_id}", f"expected_genus={genus}",
              f"ell={ell}", f"base_change_k={k}"]
    for r in records:
        sign = "+1" if r["al"] == 1 else "-1"
        h = ",".join(str(c) for c in r["h"])
        lines.append(f"record label={r['label']} level={r['level']} al={sign} "
                     f"h={h} mult=1")
    return "\n".join(lines) + "\n"


def build_all():
    files = {}
    for p, g in X0PLUS.items():
        recs = [r for r in orbits(p, 2) if r["al"] == 1]
        cid = f"x0plus_{p}"
        files[cid] = render(cid, f"X_0^+({p}) over F_2 (w_{p} = +1 part)",
                            g, 2, 1, recs, [f"level {p}, ell 2, al=+1"])
    for p, (ell, g, gplus) in CARTAN.items():
        recs = orbits(p * p, ell)
        cid = f"xns_{p}"
        files[cid] = render(cid, f"X_ns({p}) over F_{ell} (all of New_{p * p})",
                            g, ell, 1, recs, [f"level {p * p}, ell {ell}"])
        plus = [r for r in recs if r["al"] == 1]
        cid = f"xnsplus_{p}"
        files[cid] = render(cid, f"X_ns^+({p}) over F_{ell} (w = +1 part)",
                            gplus, ell, 1, plus,
                            [f"level {p * p}, ell {ell}, al=+1"])
    # X_ns^+(19) over quadratic extensions: F_4 (2 inert) and F_25
    for ell in (2, 5):
        plus = [r for r in orbits(361, ell) if r["al"] == 1]
        cid = f"xnsplus_19_F{ell * ell}"
        files[cid] = render(cid, f"X_ns^+(19) over F_{ell * ell}", 8, ell, 2,
                            plus, [f"level 361, ell {ell}, al=+1, base change 2"])
    for p, ell in SPLIT.items():
        new_plus = [r for r in orbits(p * p, ell) if r["al"] == 1]
        old = orbits(p, ell)
        g = sum(len(r["h"]) - 1 for r in new_plus + old)
        cid = f"xs_{p}"
        files[cid] = render(
            cid, f"X_s({p}) = X_0^+({p * p}) over F_{ell}: New^+_{p * p} "
            f"plus New_{p} once", g, ell, 1, new_plus + old,
            [f"level {p * p}, ell {ell}, al=+1", f"level {p}, ell {ell}, all"])
    return files


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve()
                                         .parent.parent / "fixtures" / "hecke"))
    args = ap.parse_args()
    pari.allocatemem(2 * 10**9)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for cid, text in build_all().items():
        (out / f"{cid}.dat").write_text(text)
        print(f"wrote {cid}.dat")


if __name__ == "__main__":
    main()
