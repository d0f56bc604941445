"""Betti numbers, chi and dim Eh_n for the simplicial fixtures and a few suspensions."""

import argparse

from eulerhom import eulerhomology as eh
from eulerhom import simplicial as sc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    complexes = {name: make() for name, make in sc.FIXTURES.items()}
    complexes["susp(rp2)"] = sc.suspension_complex(sc.projective_plane())
    complexes["torus+klein"] = sc.disjoint_union_complex(sc.torus(), sc.klein_bottle())
    print(f"{'complex':14} {'f-vector':18} {'chi':>4}  betti mod 2    Eh_0..Eh_{args.max_degree}")
    for name, x in complexes.items():
        betti = sc.betti_mod2(x)
        dims = eh.eh_dims(x, args.max_degree)
        print(f"{name:14} {str(x.f_vector()):18} {sc.euler_characteristic(x):4}  {str(betti):13} {dims}")


if __name__ == "__main__":
    main()
