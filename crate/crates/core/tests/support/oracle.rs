//! Floating-point character tables computed by brute force, independent of
//! the exact modular pipeline: classes by conjugating with every element,
//! class multiplication by counting products, and characters from one
//! Hermitian eigenproblem on the centre of the group algebra.

use std::collections::HashMap;
use std::f64::consts::PI;

use cosetlab::{CharTable, Cyclotomic, PermGroup, Permutation};
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

pub const TOL: f64 = 1e-8;

pub struct Oracle {
    pub sizes: Vec<u64>,
    /// Rows of character values, columns in the order of the supplied
    /// representatives.
    pub rows: Vec<Vec<Complex64>>,
}

pub fn oracle_table(group: &PermGroup, reps: &[Permutation]) -> Oracle {
    let elements = group.elements().unwrap().to_vec();
    let n = elements.len();
    let index: HashMap<&[u32], usize> = elements.iter().enumerate().map(|(i, g)| (g.images(), i)).collect();
    let inverses: Vec<Permutation> = elements.iter().map(Permutation::inverse).collect();

    let mut class = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let c = members.len();
        let mut m = Vec::new();
        for (g, gi) in elements.iter().zip(&inverses) {
            let y = g.compose(&elements[x]).unwrap().compose(gi).unwrap();
            let j = index[y.images()];
            if class[j] == usize::MAX {
                class[j] = c;
                m.push(j);
            }
        }
        members.push(m);
    }
    let r = members.len();
    assert_eq!(r, reps.len(), "class count");
    // renumber so that column j contains reps[j]
    let order: Vec<usize> = reps.iter().map(|p| class[index[p.images()]]).collect();
    let mut pos = vec![usize::MAX; r];
    for (j, &c) in order.iter().enumerate() {
        pos[c] = j;
    }
    assert!(pos.iter().all(|&p| p != usize::MAX), "representatives are not from distinct classes");
    let cls = |e: usize| pos[class[e]];
    let sizes: Vec<u64> = order.iter().map(|&c| members[c].len() as u64).collect();

    // a[j][i][k] = #{x in K_j : x^-1 z_k in K_i}
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (j, aj) in a.iter_mut().enumerate() {
        for k in 0..r {
            let z = &reps[k];
            for &x in &members[order[j]] {
                let y = inverses[x].compose(z).unwrap();
                aj[cls(index[y.images()])][k] += 1;
            }
        }
    }
    let inv: Vec<usize> = reps.iter().map(|p| cls(index[p.inverse().images()])).collect();

    // multiplication by the j-th class sum in the basis K_i / sqrt|K_i|
    let b = |j: usize| {
        DMatrix::from_fn(r, r, |k, i| {
            Complex64::new(a[j][i][k] as f64 * (sizes[k] as f64 / sizes[i] as f64).sqrt(), 0.0)
        })
    };
    let mut h = DMatrix::<Complex64>::zeros(r, r);
    for j in 1..r {
        let (re, im) = (1.0 / (j as f64 + 0.618).sqrt(), 1.0 / (j as f64 * 1.7 + 0.29));
        let (bj, bi) = (b(j), b(inv[j]));
        h += (&bj + &bi) * Complex64::new(re, 0.0) + (&bj - &bi) * Complex64::new(0.0, im);
    }
    assert!((&h - h.adjoint()).norm() < 1e-9, "class operator is not Hermitian");
    let eig = SymmetricEigen::new(h);
    let rows = (0..r)
        .map(|c| {
            let v = eig.eigenvectors.column(c);
            let at = |i: usize| v[i] / (sizes[i] as f64).sqrt();
            let rho: Vec<Complex64> = (0..r).map(|i| (at(i) / at(0)).conj()).collect();
            let weight: f64 = rho.iter().zip(&sizes).map(|(x, &s)| s as f64 * x.norm_sqr()).sum();
            let d = (n as f64 / weight).sqrt();
            rho.into_iter().map(|x| x * d).collect()
        })
        .collect();
    Oracle { sizes, rows }
}

pub fn to_complex(c: &Cyclotomic) -> Complex64 {
    let e = c.conductor() as f64;
    let den = c.denominator() as f64;
    c.numerators()
        .iter()
        .enumerate()
        .map(|(k, &v)| Complex64::from_polar(v as f64 / den, 2.0 * PI * k as f64 / e))
        .sum()
}

/// Matches every exact row to a distinct oracle row, entrywise within
/// [`TOL`].
pub fn compare(t: &CharTable, oracle: &Oracle) -> Result<(), String> {
    if t.header().class_sizes != oracle.sizes {
        return Err(format!("class sizes {:?} vs {:?}", t.header().class_sizes, oracle.sizes));
    }
    if t.rows().len() != oracle.rows.len() {
        return Err("row count".into());
    }
    let mut used = vec![false; oracle.rows.len()];
    for (r, row) in t.rows().iter().enumerate() {
        let exact: Vec<Complex64> = row.values().iter().map(to_complex).collect();
        let hit = oracle
            .rows
            .iter()
            .enumerate()
            .position(|(i, o)| !used[i] && o.iter().zip(&exact).all(|(a, b)| (a - b).norm() < TOL));
        match hit {
            Some(i) => used[i] = true,
            None => return Err(format!("row {r} has no oracle counterpart: {exact:?}")),
        }
    }
    Ok(())
}
