# Copyright 2026 The nsforge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the sample problem files under problems/."""

import json
import pathlib

import numpy as np

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)


def enc(m):
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]


def collective(n, p):
    total = np.zeros((2**n, 2**n), dtype=complex)
    for q in range(n):
        term = np.eye(1)
        for k in range(n):
            term = np.kron(term, p if k == q else I2)
        total += term
    return total / 2


def write(path, doc):
    path.write_text(json.dumps(doc, indent=1) + "\n")


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "problems"
    out.mkdir(exist_ok=True)
    write(out / "pauli_xz.json", {
        "schema_version": "1", "dim": 2,
        "generators": [{"name": "sx", "matrix": enc(X)}, {"name": "sz", "matrix": enc(Z)}]})
    write(out / "collective3.json", {
        "schema_version": "1", "dim": 8,
        "generators": [{"name": name, "matrix": enc(collective(3, p))}
                       for name, p in (("Sx", X), ("Sy", Y), ("Sz", Z))]})
    write(out / "dephasing_split.json", {
        "schema_version": "1", "dim": 2,
        "generators": [{"name": "id", "matrix": enc(I2)}, {"name": "sz", "matrix": enc(Z)}]})
    write(out / "bang_bang.json", {
        "schema_version": "1", "dim": 2,
        "generators": [{"name": "sx", "matrix": enc(X)}],
        "group": [enc(I2), enc(Z)]})
    # Bath-only Lindblad operator with a system-bath perturbation.
    plus = np.full((2, 2), 0.5, dtype=complex)
    sigma = np.diag([0.7, 0.3]).astype(complex)
    lower = np.array([[0, 1], [0, 0]], dtype=complex)
    write(out / "robust_qubit.json", {
        "schema_version": "1", "dim": 4,
        "lindblad": {"d_S": 2, "d_B": 2,
                     "L_ops": [enc(np.kron(I2, lower))],
                     "delta_ops": [enc(np.kron(X, Z))],
                     "rho_S": enc(plus), "sigma_B": enc(sigma)}})
    write(out / "direct_noise.json", {
        "schema_version": "1", "dim": 4,
        "lindblad": {"d_S": 2, "d_B": 2,
                     "L_ops": [enc(np.zeros((4, 4)))],
                     "delta_ops": [enc(np.kron(Z, I2))],
                     "rho_S": enc(plus), "sigma_B": enc(sigma)}})


if __name__ == "__main__":
    main()
