//! Brute-force cohomology dimensions, written independently of the library
//! internals: cochains are full tensors over ordered tuples, skew-symmetry
//! and twist-intertwining are imposed as explicit linear constraints, and
//! ranks come from a separate Gaussian elimination.
//!
//! Only the raw structure constants are read from the library types.

#![allow(dead_code)]

use bihom_core::algebra::{BiHomAlgebra, Representation};
use bihom_core::compatible::CompatiblePair;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;
type Mat = Vec<Vec<Q>>;

/// Plain-data copy of one (bracket, action) structure.
#[derive(Clone)]
pub struct Data {
    pub d: usize,
    pub dv: usize,
    /// bracket[i][j][k]
    pub bracket: Vec<Vec<Vec<Q>>>,
    /// action[i][a][b]
    pub action: Vec<Vec<Vec<Q>>>,
    pub alpha: Mat,
    pub beta: Mat,
    pub alpha_v: Mat,
    pub beta_v: Mat,
}

impl Data {
    pub fn new(a: &BiHomAlgebra, v: &Representation, which: usize, action: usize) -> Self {
        Data {
            d: a.dim(),
            dv: v.dim_v(),
            bracket: a.bracket(which).unwrap().to_nested(),
            action: v.action(action).unwrap().to_nested(),
            alpha: a.alpha().to_rows(),
            beta: a.beta().to_rows(),
            alpha_v: v.alpha_v().to_rows(),
            beta_v: v.beta_v().to_rows(),
        }
    }
}

fn zero() -> Q {
    Q::zero()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(zero(), |acc, t| acc + &a[i][t] * &b[t][j]))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { zero() }).collect())
        .collect()
}

fn mat_pow(a: &Mat, e: usize) -> Mat {
    (0..e).fold(identity(a.len()), |acc, _| mat_mul(&acc, a))
}

/// Gauss–Jordan inverse, panicking on singular input.
fn mat_inv(a: &Mat) -> Mat {
    let n = a.len();
    let mut m: Mat = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("singular matrix");
        m.swap(p, c);
        let inv = Q::one() / &m[c][c];
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..2 * n {
                    let sub = &f * &m[c][j];
                    m[r][j] -= sub;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn apply(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|r| r.iter().zip(v).fold(zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Row-reduces in place and returns the pivot columns.
fn eliminate(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..cols {
                    if !rows[r][j].is_zero() {
                        let sub = &f * &rows[r][j];
                        rows[i][j] -= sub;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    eliminate(&mut rows, cols).len()
}

fn kernel(mut rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    if rows.is_empty() {
        return (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { Q::one() } else { zero() }).collect())
            .collect();
    }
    let pivots = eliminate(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// A full cochain: `values[tuple_index * dv + k]`, tuples in base-`d` order.
pub type Full = Vec<Q>;

fn tuple_index(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

fn all_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |x| {
                    let mut u = t.clone();
                    u.push(x);
                    u
                })
            })
            .collect();
    }
    out
}

fn pow(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

/// Basis of skew cochains intertwining both twist pairs, by solving the
/// constraints on the full tensor.
pub fn cochain_basis(data: &Data, n: usize) -> Vec<Full> {
    let (d, dv) = (data.d, data.dv);
    let size = pow(d, n) * dv;
    let tuples = all_tuples(d, n);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    // f(.., x, y, ..) + f(.., y, x, ..) = 0
    for t in &tuples {
        for pos in 0..n.saturating_sub(1) {
            let mut s = t.clone();
            s.swap(pos, pos + 1);
            for k in 0..dv {
                let mut row = vec![zero(); size];
                row[tuple_index(t, d) * dv + k] += Q::one();
                row[tuple_index(&s, d) * dv + k] += Q::one();
                rows.push(row);
            }
        }
    }
    for (m, mv) in [(&data.alpha, &data.alpha_v), (&data.beta, &data.beta_v)] {
        for t in &tuples {
            for k in 0..dv {
                let mut row = vec![zero(); size];
                for kk in 0..dv {
                    row[tuple_index(t, d) * dv + kk] += &mv[k][kk];
                }
                for s in &tuples {
                    let coeff = (0..n).fold(Q::one(), |acc, a| acc * &m[s[a]][t[a]]);
                    if !coeff.is_zero() {
                        row[tuple_index(s, d) * dv + k] -= coeff;
                    }
                }
                rows.push(row);
            }
        }
    }
    kernel(rows, size)
}

fn bracket_apply(data: &Data, x: &[Q], y: &[Q]) -> Vec<Q> {
    let d = data.d;
    let mut out = vec![zero(); d];
    for i in 0..d {
        for j in 0..d {
            let c = &x[i] * &y[j];
            if !c.is_zero() {
                for k in 0..d {
                    out[k] += &c * &data.bracket[i][j][k];
                }
            }
        }
    }
    out
}

fn act(data: &Data, x: &[Q], v: &[Q]) -> Vec<Q> {
    let dv = data.dv;
    let mut out = vec![zero(); dv];
    for i in 0..data.d {
        for a in 0..dv {
            let c = &x[i] * &v[a];
            if !c.is_zero() {
                for b in 0..dv {
                    out[b] += &c * &data.action[i][a][b];
                }
            }
        }
    }
    out
}

fn eval(f: &Full, data: &Data, args: &[Vec<Q>]) -> Vec<Q> {
    let (d, dv) = (data.d, data.dv);
    let mut out = vec![zero(); dv];
    for t in all_tuples(d, args.len()) {
        let c = t.iter().enumerate().fold(Q::one(), |acc, (a, &x)| acc * &args[a][x]);
        if c.is_zero() {
            continue;
        }
        let base = tuple_index(&t, d) * dv;
        for k in 0..dv {
            out[k] += &c * &f[base + k];
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { Q::one() } else { zero() }).collect()
}

fn column(m: &Mat, j: usize) -> Vec<Q> {
    m.iter().map(|r| r[j].clone()).collect()
}

/// The coboundary evaluated on every ordered tuple.
pub fn coboundary(data: &Data, f: &Full, n: usize) -> Full {
    let (d, dv) = (data.d, data.dv);
    let alpha_inv = mat_inv(&data.alpha);
    let beta_inv = mat_inv(&data.beta);
    let mut out = Vec::with_capacity(pow(d, n + 1) * dv);
    if n == 0 {
        let ab = mat_mul(&data.alpha, &beta_inv);
        for j in 0..d {
            out.extend(act(data, &column(&ab, j), f));
        }
        return out;
    }
    let lead = mat_mul(&data.alpha, &mat_pow(&data.beta, n - 1));
    let aib = mat_mul(&alpha_inv, &data.beta);
    for t in all_tuples(d, n + 1) {
        let mut value = vec![zero(); dv];
        for i in 0..=n {
            let rest: Vec<Vec<Q>> = (0..=n).filter(|&k| k != i).map(|k| unit(d, t[k])).collect();
            let term = act(data, &column(&lead, t[i]), &eval(f, data, &rest));
            let s = if i % 2 == 0 { Q::one() } else { -Q::one() };
            for k in 0..dv {
                value[k] += &s * &term[k];
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let mut args = vec![bracket_apply(data, &column(&aib, t[i]), &unit(d, t[j]))];
                args.extend((0..=n).filter(|&k| k != i && k != j).map(|k| column(&data.beta, t[k])));
                let term = eval(f, data, &args);
                let s = if (i + j) % 2 == 0 { Q::one() } else { -Q::one() };
                for k in 0..dv {
                    value[k] += &s * &term[k];
                }
            }
        }
        out.extend(value);
    }
    out
}

pub fn cohomology(data: &Data, n: usize) -> usize {
    let basis = cochain_basis(data, n);
    let image = |b: &[Full], deg: usize| -> usize {
        if b.is_empty() {
            0
        } else {
            rank(b.iter().map(|f| coboundary(data, f, deg)).collect())
        }
    };
    let prev = if n == 0 {
        0
    } else {
        image(&cochain_basis(data, n - 1), n - 1)
    };
    basis.len() - image(&basis, n) - prev
}

/// Compatible cohomology with `C^0_c` cut out by explicit constraints and
/// `C^n_c` as `n` copies of `C^n`.
pub fn compatible_cohomology(first: &Data, second: &Data, n: usize) -> usize {
    let (d, dv) = (first.d, first.dv);
    let basis = |m: usize| -> Vec<Vec<Full>> {
        if m == 0 {
            let ab = mat_mul(&first.alpha, &mat_inv(&first.beta));
            let mut rows: Vec<Vec<Q>> = Vec::new();
            for t in [&first.alpha_v, &first.beta_v] {
                for (k, row) in t.iter().enumerate() {
                    let mut r = row.clone();
                    r[k] -= Q::one();
                    rows.push(r);
                }
            }
            for j in 0..d {
                let p = column(&ab, j);
                for k in 0..dv {
                    rows.push(
                        (0..dv)
                            .map(|b| act(first, &p, &unit(dv, b))[k].clone() - act(second, &p, &unit(dv, b))[k].clone())
                            .collect(),
                    );
                }
            }
            return kernel(rows, dv).into_iter().map(|v| vec![v]).collect();
        }
        let single = cochain_basis(first, m);
        let zero_f = vec![zero(); pow(d, m) * dv];
        let mut out = Vec::new();
        for slot in 0..m {
            for b in &single {
                let mut tuple = vec![zero_f.clone(); m];
                tuple[slot] = b.clone();
                out.push(tuple);
            }
        }
        out
    };
    let delta = |fs: &[Full], m: usize| -> Vec<Q> {
        if m == 0 {
            return coboundary(first, &fs[0], 0);
        }
        let mut out = Vec::new();
        for i in 0..=m {
            let mut slot = vec![zero(); pow(d, m + 1) * dv];
            if i < m {
                for (s, x) in slot.iter_mut().zip(coboundary(first, &fs[i], m)) {
                    *s += x;
                }
            }
            if i >= 1 {
                for (s, x) in slot.iter_mut().zip(coboundary(second, &fs[i - 1], m)) {
                    *s += x;
                }
            }
            out.extend(slot);
        }
        out
    };
    let image = |b: &[Vec<Full>], m: usize| -> usize {
        if b.is_empty() {
            0
        } else {
            rank(b.iter().map(|f| delta(f, m)).collect())
        }
    };
    let here = basis(n);
    let prev = if n == 0 { 0 } else { image(&basis(n - 1), n - 1) };
    here.len() - image(&here, n) - prev
}

/// Both structures of a pair with the adjoint representation.
pub fn adjoint_pair_data(p: &CompatiblePair) -> (Data, Data) {
    let v = Representation::adjoint(p.algebra());
    (Data::new(p.algebra(), &v, 0, 0), Data::new(p.algebra(), &v, 1, 1))
}
