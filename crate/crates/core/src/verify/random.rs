//! Seeded generators of random valid Lie algebras.
//!
//! Instance `i` of a run with seed `s` is drawn from a ChaCha8 stream keyed by
//! `(s, i)`, so instances are independent of each other and of the order in
//! which they are produced.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};
use crate::liealg::{LieAlgebra, Subspace};
use crate::repn::Representation;

pub const FAMILIES: &[&str] = &["random-solvable", "random-semidirect", "random-small"];

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Unit lower times unit upper triangular with small entries: always
/// invertible, usually dense.
pub fn random_basis_change(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let pool = [-1i64, 0, 0, 1, 2];
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = q(*pool.choose(rng).unwrap());
            if i > j {
                l[(i, j)] = v;
            } else if i < j {
                u[(i, j)] = v;
            }
        }
    }
    l.mul(&u).unwrap()
}

/// Signed, scaled permutation followed by `transvections` random
/// elementary operations: random but keeps structure constants sparse.
pub fn sparse_basis_change(rng: &mut ChaCha8Rng, n: usize, transvections: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut p = Matrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(i, j)] = q(*[-1i64, 1, 2].choose(rng).unwrap());
    }
    for _ in 0..transvections {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut e = Matrix::identity(n);
        e[(i, j)] = q(*[-1i64, 1].choose(rng).unwrap());
        p = p.mul(&e).unwrap();
    }
    p
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// Linear span of `gens` closed under commutators, or `None` once it grows
/// beyond `max_dim`.
fn lie_closure(size: usize, gens: &[Matrix], max_dim: usize) -> Option<Vec<Matrix>> {
    let to_mats = |s: &Subspace| -> Vec<Matrix> {
        s.basis()
            .iter()
            .map(|v| Matrix::from_vec(size, size, v.clone()).unwrap())
            .collect()
    };
    let mut span = Subspace::span(size * size, &gens.iter().map(flatten).collect::<Vec<_>>());
    loop {
        if span.dim() > max_dim {
            return None;
        }
        let mats = to_mats(&span);
        let mut vs = span.basis().to_vec();
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                vs.push(flatten(&mats[i].commutator(&mats[j]).unwrap()));
            }
        }
        let next = Subspace::span(size * size, &vs);
        if next.dim() == span.dim() {
            return Some(mats);
        }
        span = next;
    }
}

/// A solvable subalgebra of upper triangular matrices of size 2..=4 and
/// dimension 1..=5: random diagonal tower elements plus random strictly upper
/// triangular generators, closed under the bracket.
pub fn random_solvable(rng: &mut ChaCha8Rng) -> LieAlgebra {
    loop {
        let k = rng.gen_range(2..=4);
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let mut d = Matrix::zeros(k, k);
            for i in 0..k {
                d[(i, i)] = q(rng.gen_range(-2..=2));
            }
            gens.push(d);
        }
        for _ in 0..rng.gen_range(1..=3) {
            let mut u = Matrix::zeros(k, k);
            for i in 0..k {
                for j in i + 1..k {
                    if rng.gen_bool(0.5) {
                        u[(i, j)] = q(*[-1i64, 1, 2].choose(rng).unwrap());
                    }
                }
            }
            gens.push(u);
        }
        let Some(basis) = lie_closure(k, &gens, 5) else { continue };
        if basis.is_empty() {
            continue;
        }
        let names = (0..basis.len()).map(|i| format!("e{i}")).collect();
        let g = LieAlgebra::from_matrix_basis("random-solvable", names, &basis).unwrap();
        let p = random_basis_change(rng, g.dim());
        return g.change_of_basis(&p).unwrap();
    }
}

/// Action of sl2 on `heisenberg(2k+1)` by `V_1` on each pair `(x_i, y_i)`
/// and trivially on `z`.
fn sl2_on_heisenberg(k: usize) -> Representation {
    let d = 2 * k + 1;
    let [h, e, f] = catalog::sl2_irrep_matrices(1);
    let mut action = vec![Matrix::zeros(d, d), Matrix::zeros(d, d), Matrix::zeros(d, d)];
    for (a, block) in action.iter_mut().zip([h, e, f]) {
        for i in 0..k {
            let idx = [i, k + i];
            for r in 0..2 {
                for c in 0..2 {
                    a[(idx[r], idx[c])] = block[(r, c)].clone();
                }
            }
        }
    }
    Representation::new(d, action).unwrap()
}

/// `sl2 ⋉ n` where `n` is abelian with a random sum of irreducibles or a
/// Heisenberg algebra with sl2 acting through copies of `V_1`, followed by a
/// sparse random change of basis (dense ones make exact elimination on the
/// degree-4 adjoint cochains far too slow). `max_radical` bounds `dim n`.
pub fn random_semidirect(rng: &mut ChaCha8Rng, max_radical: usize) -> LieAlgebra {
    let sl2 = catalog::sl2();
    let abelian_choices: Vec<Vec<usize>> = vec![
        vec![0],
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![0, 0],
        vec![0, 1],
        vec![1, 1],
        vec![1, 2],
        vec![0, 2],
        vec![1, 1, 0],
    ];
    let mut options: Vec<(String, LieAlgebra, Representation)> = abelian_choices
        .into_iter()
        .filter(|w| w.iter().map(|m| m + 1).sum::<usize>() <= max_radical)
        .map(|w| {
            let module = catalog::sl2_module_sum(&w);
            let r = LieAlgebra::abelian(module.dim());
            (format!("{w:?}"), r, module)
        })
        .collect();
    for k in [1usize, 2] {
        if 2 * k < max_radical {
            options.push((format!("h{}", 2 * k + 1), catalog::heisenberg(2 * k + 1), sl2_on_heisenberg(k)));
        }
    }
    let (_, r, module) = options.choose(rng).expect("at least one radical fits");
    let g = LieAlgebra::semidirect_product(&sl2, r, module).expect("actions are derivations");
    let p = sparse_basis_change(rng, g.dim(), 2);
    g.change_of_basis(&p).unwrap().with_name("random-semidirect")
}

/// Algebras of dimension at most 5: solvable ones, `sl2`, and `sl2 ⋉ V` with
/// `dim V <= 2`.
pub fn random_small(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let g = match rng.gen_range(0..4) {
        0 | 1 => random_solvable(rng),
        2 => random_semidirect(rng, 2),
        _ => {
            let sl2 = catalog::sl2();
            let p = random_basis_change(rng, 3);
            sl2.change_of_basis(&p).unwrap()
        }
    };
    g.with_name("random-small")
}

/// Instance `index` of `family` under `seed`, Jacobi re-checked.
pub fn generate(family: &str, seed: u64, index: u64) -> Result<LieAlgebra> {
    let mut rng = rng_for(seed, index);
    let g = match family {
        "random-solvable" => random_solvable(&mut rng),
        "random-semidirect" => random_semidirect(&mut rng, 5),
        "random-small" => random_small(&mut rng),
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    if !g.validate_structure().is_empty() {
        return Err(Error::Internal(format!("{family} generated an algebra violating Jacobi")));
    }
    Ok(g.with_name(format!("{family}#{seed}/{index}")))
}
