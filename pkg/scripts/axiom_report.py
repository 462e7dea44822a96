"""Per-axiom soundness table: instance counts, normal-form agreement and oracle verdicts.

    python3 scripts/axiom_report.py [--n 200] [--seed 1] [--depth 12]

For every schema in the conversion catalog this generates ``n`` distinct
well-typed instances, normalises both sides with NbE and asks the rewrite
oracle whether the sides are convertible.  Term instances are compared with
``rewrite_oracle``, type instances with ``rewrite_oracle_ty`` and
substitution instances componentwise with ``rewrite_oracle_sub``.
"""
import argparse
import time
from collections import Counter

from nbett import nbe
from nbett.axioms import CATALOG
from nbett.generate import axiom_instances, check_instance_side, default_pool
from nbett.oracle import Verdict, rewrite_oracle, rewrite_oracle_sub, rewrite_oracle_ty


def verdict_of(inst, sort: str, depth: int) -> Verdict:
    match sort:
        case "ty":
            return rewrite_oracle_ty(inst.ctx, inst.lhs, inst.rhs, depth)
        case "sub":
            return rewrite_oracle_sub(inst.ctx, inst.cod, inst.lhs, inst.rhs, depth)
    return rewrite_oracle(inst.ctx, inst.ty, inst.lhs, inst.rhs, depth)


def normal_forms_agree(inst, sort: str) -> bool:
    match sort:
        case "ty":
            return nbe.norm_type(inst.ctx, inst.lhs) == nbe.norm_type(inst.ctx, inst.rhs)
        case "sub":
            return nbe.norm_sub(inst.ctx, inst.cod, inst.lhs) == nbe.norm_sub(inst.ctx, inst.cod, inst.rhs)
    return nbe.norm(inst.ctx, inst.ty, inst.lhs) == nbe.norm(inst.ctx, inst.ty, inst.rhs)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--n", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--depth", type=int, default=12)
    args = parser.parse_args()

    pool = default_pool()
    print(f"{'axiom':8} {'sort':4} {'n':>5} {'nf-agree':>8} {'rechecked':>9} {'oracle equal/neq/unknown':>26}")
    started = time.perf_counter()
    for ax in CATALOG:
        insts = axiom_instances(ax, args.seed, args.n, pool)
        agree = sum(normal_forms_agree(i, ax.sort) for i in insts)
        rechecked = sum(check_instance_side(i, i.lhs) and check_instance_side(i, i.rhs) for i in insts)
        verdicts = Counter(verdict_of(i, ax.sort, args.depth) for i in insts)
        oracle = f"{verdicts[Verdict.EQUAL]}/{verdicts[Verdict.NOT_EQUAL]}/{verdicts[Verdict.UNKNOWN]}"
        print(f"{ax.name:8} {ax.sort:4} {len(insts):5} {agree:8} {rechecked:9} {oracle:>26}")
    print(f"total time {time.perf_counter() - started:.1f}s")


if __name__ == "__main__":
    main()
