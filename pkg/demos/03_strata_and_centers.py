"""Walkthrough: admissible sets, stratum tori, and center lattices.

The prime spectra of the quantized algebra and of its Poisson limit are
both stratified by admissible subsets of the marker family
{z_1, z_2, y_2, x_2, ..., z_n, y_n, x_n}.  Each stratum localizes to a
quantum torus whose commutation data is a matrix of parameter exponents;
dotting those exponents with the derivative symbols mu gives the Poisson
side, and the common integer kernel describes the stratum's center.

Run:  python demos/03_strata_and_centers.py
"""

from qweyl import (
    MuPoly,
    WeylParams,
    center_lattice,
    enumerate_admissible,
    poisson_center_lattice,
    stratum_report,
    torus_matrix_p,
    torus_matrix_q,
    y_set,
)

print(__doc__)

params = WeylParams.from_coordinate_matrices(
    3, 2,
    [[1, 0], [0, 1], [1, 1]],
    [
        [[0, 1, 0], [-1, 0, 1], [0, -1, 0]],   # first eta coordinate of L
        [[0, 0, 1], [0, 0, -1], [-1, 1, 0]],   # second eta coordinate of L
    ],
)

for n in (1, 2, 3):
    sets = enumerate_admissible(n)
    print(f"n={n}: {len(sets)} admissible sets:",
          "; ".join(",".join(T.names()) or "{}" for T in sets))
print()

T = enumerate_admissible(3)[5]
print("chosen stratum:", ",".join(T.names()) or "{}")
print("generators Y_T:", [f"{k}{i}" for k, i in y_set(T)])

qm = torus_matrix_q(params, T)
pm = torus_matrix_p(params, T)
print("commutation exponents (w_i w_j = eta^c w_j w_i):")
for row in qm:
    print("   ", [list(v) for v in row])
print("bracket forms ({w_i, w_j} = d w_i w_j):")
for row in pm:
    print("   ", [str(d) for d in row])
print("derivative link d = c . mu holds entrywise:",
      all(pm[i][j] == MuPoly.linear(qm[i][j])
          for i in range(len(pm)) for j in range(len(pm))))
print()

lat_q = center_lattice(qm, params.r)
lat_p = poisson_center_lattice(pm, params.r)
print("center lattice (quantized):", lat_q.basis or "trivial")
print("center lattice (Poisson):  ", lat_p.basis or "trivial")
print("lattices coincide:", lat_q.basis == lat_p.basis)
print()

print("full per-stratum reports, n = 2:")
params2 = WeylParams.from_coordinate_matrices(
    2, 2, [[1, 0], [0, 1]], [[[0, 1], [-1, 0]], [[0, 0], [0, 0]]]
)
for T in enumerate_admissible(2):
    rep = stratum_report(params2, T)
    tag = ",".join(rep.markers) or "{}"
    print(f"  T={tag:16s} Y_T={','.join(rep.generators):12s} "
          f"center rank {rep.center_rank}"
          + ("  (trivial)" if rep.center_trivial else f"  basis {list(map(list, rep.center_basis))}"))
