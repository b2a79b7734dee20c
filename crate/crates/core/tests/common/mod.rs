//! Independent evaluation of the identities for cross-checking.
//!
//! Instances are copied into plain nested `BigRational` arrays and every
//! identity is written as a signed sum of expression trees, evaluated by a
//! naive recursive interpreter. Nothing here calls into the checkers.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bihom_core::{AlgebraInstance, Field, LinearOperator, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Q = BigRational;
pub type Vector = Vec<Q>;

pub fn rat(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_q(s: &Scalar) -> Q {
    s.as_rational().expect("rational instance").clone()
}

pub fn to_scalar(x: &Q) -> Scalar {
    Field::Rational
        .from_bigints(x.numer().clone(), x.denom().clone())
        .unwrap()
}

pub fn to_scalars(v: &[Q]) -> Vec<Scalar> {
    v.iter().map(to_scalar).collect()
}

pub fn basis(d: usize, i: usize) -> Vector {
    (0..d).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}

/// Entries `n/d` with `n, d` uniform in `[-bound, bound]`, `d != 0`.
pub fn random_vector(rng: &mut impl Rng, dim: usize, bound: i64) -> Vector {
    (0..dim)
        .map(|_| {
            let n = rng.gen_range(-bound..=bound);
            let mut d = 0;
            while d == 0 {
                d = rng.gen_range(-bound..=bound);
            }
            rat(n, d)
        })
        .collect()
}

pub type Matrix = Vec<Vec<Q>>;

pub fn matrix(f: &LinearOperator) -> Matrix {
    f.rows().map(|r| r.iter().map(to_q).collect()).collect()
}

pub fn apply(f: &Matrix, x: &[Q]) -> Vector {
    f.iter()
        .map(|row| row.iter().zip(x).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Structure constants `c[i][j][k]`.
pub type Tensor = Vec<Vec<Vec<Q>>>;

pub struct Dense {
    pub dim: usize,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub products: BTreeMap<String, Tensor>,
}

impl Dense {
    pub fn new(a: &AlgebraInstance) -> Self {
        let d = a.dim();
        let products = a
            .products()
            .iter()
            .map(|(l, m)| {
                let t = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| (0..d).map(|k| to_q(m.coeff(i, j, k))).collect())
                            .collect()
                    })
                    .collect();
                (l.clone(), t)
            })
            .collect();
        Dense {
            dim: d,
            alpha: matrix(a.alpha()),
            beta: matrix(a.beta()),
            products,
        }
    }

    pub fn mul(&self, label: &str, x: &[Q], y: &[Q]) -> Vector {
        let label = if label == "m" {
            self.products.keys().next().expect("one product").as_str()
        } else {
            label
        };
        let c = &self.products[label];
        let mut out = vec![Q::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += xi * yj * &c[i][j][k];
                }
            }
        }
        out
    }

    pub fn eval(&self, e: &Expr, args: &[Vector]) -> Vector {
        match e {
            Expr::Var(i) => args[*i].clone(),
            Expr::Alpha(x) => apply(&self.alpha, &self.eval(x, args)),
            Expr::Beta(x) => apply(&self.beta, &self.eval(x, args)),
            Expr::Mul(l, x, y) => self.mul(l, &self.eval(x, args), &self.eval(y, args)),
            Expr::Sum(x, y) => {
                let a = self.eval(x, args);
                let b = self.eval(y, args);
                a.iter().zip(&b).map(|(p, q)| p + q).collect()
            }
        }
    }

    pub fn residual(&self, terms: &[(i64, Expr)], args: &[Vector]) -> Vector {
        let mut out = vec![Q::zero(); self.dim];
        for (sign, e) in terms {
            let v = self.eval(e, args);
            for (o, x) in out.iter_mut().zip(v) {
                *o += rat(*sign, 1) * x;
            }
        }
        out
    }

    /// Basis tuples (lexicographic) with nonzero residual, with the residual.
    pub fn failures(&self, terms: &[(i64, Expr)], arity: usize) -> Vec<(Vec<usize>, Vector)> {
        let d = self.dim;
        let mut out = Vec::new();
        for n in 0..d.pow(arity as u32) {
            let mut t = vec![0; arity];
            let mut m = n;
            for slot in t.iter_mut().rev() {
                *slot = m % d;
                m /= d;
            }
            let args: Vec<Vector> = t.iter().map(|&i| basis(d, i)).collect();
            let r = self.residual(terms, &args);
            if r.iter().any(|x| !x.is_zero()) {
                out.push((t, r));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum Expr {
    Var(usize),
    Alpha(Box<Expr>),
    Beta(Box<Expr>),
    Mul(&'static str, Box<Expr>, Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
}

pub fn x() -> Expr {
    Expr::Var(0)
}
pub fn y() -> Expr {
    Expr::Var(1)
}
pub fn z() -> Expr {
    Expr::Var(2)
}
pub fn al(e: Expr) -> Expr {
    Expr::Alpha(Box::new(e))
}
pub fn be(e: Expr) -> Expr {
    Expr::Beta(Box::new(e))
}
pub fn m(a: Expr, b: Expr) -> Expr {
    Expr::Mul("m", Box::new(a), Box::new(b))
}
pub fn prec(a: Expr, b: Expr) -> Expr {
    Expr::Mul("prec", Box::new(a), Box::new(b))
}
pub fn succ(a: Expr, b: Expr) -> Expr {
    Expr::Mul("succ", Box::new(a), Box::new(b))
}
pub fn sum(a: Expr, b: Expr) -> Expr {
    Expr::Sum(Box::new(a), Box::new(b))
}

/// Signed sum of expression trees.
pub type Terms = Vec<(i64, Expr)>;

/// `(label, arity, LHS - RHS)` for every identity, transcribed from the
/// definitions.
pub fn identities() -> Vec<(&'static str, usize, Terms)> {
    let lbhpl = |p: Expr, q: Expr, r: Expr| {
        vec![
            (1, m(al(be(p.clone())), m(al(q.clone()), r.clone()))),
            (-1, m(m(be(p), al(q)), be(r))),
        ]
    };
    let rbhpl = |p: Expr, q: Expr, r: Expr| {
        vec![
            (1, m(al(p.clone()), m(be(q.clone()), al(r.clone())))),
            (-1, m(m(p, be(q)), al(be(r)))),
        ]
    };
    let neg = |v: Vec<(i64, Expr)>| v.into_iter().map(|(s, e)| (-s, e)).collect::<Vec<_>>();
    let cat = |a: Vec<(i64, Expr)>, b: Vec<(i64, Expr)>| a.into_iter().chain(b).collect::<Vec<_>>();
    vec![
        (
            "eqasso",
            3,
            vec![(1, m(al(x()), m(y(), z()))), (-1, m(m(x(), y()), be(z())))],
        ),
        ("BHskewsym", 2, vec![(1, m(be(x()), al(y()))), (1, m(be(y()), al(x())))]),
        (
            "BiHomJacobi",
            3,
            vec![
                (1, m(be(be(x())), m(be(y()), al(z())))),
                (1, m(be(be(y())), m(be(z()), al(x())))),
                (1, m(be(be(z())), m(be(x()), al(y())))),
            ],
        ),
        (
            "altBiHomJacobi",
            3,
            vec![
                (1, m(m(be(x()), al(y())), al(al(z())))),
                (1, m(m(be(y()), al(z())), al(al(x())))),
                (1, m(m(be(z()), al(x())), al(al(y())))),
            ],
        ),
        (
            "leftBHleibniz",
            3,
            vec![
                (1, m(al(be(x())), m(y(), z()))),
                (-1, m(m(be(x()), y()), be(z()))),
                (-1, m(be(y()), m(al(x()), z()))),
            ],
        ),
        (
            "rightBHleibniz",
            3,
            vec![
                (1, m(m(x(), y()), al(be(z())))),
                (-1, m(m(x(), be(z())), al(y()))),
                (-1, m(al(x()), m(y(), al(z())))),
            ],
        ),
        ("lBHpL", 3, cat(lbhpl(x(), y(), z()), neg(lbhpl(y(), x(), z())))),
        ("rBHpL", 3, cat(rbhpl(x(), y(), z()), neg(rbhpl(x(), z(), y())))),
        (
            "BiHomdend6",
            3,
            vec![
                (1, prec(prec(x(), y()), be(z()))),
                (-1, prec(al(x()), sum(prec(y(), z()), succ(y(), z())))),
            ],
        ),
        (
            "BiHomdend7",
            3,
            vec![(1, prec(succ(x(), y()), be(z()))), (-1, succ(al(x()), prec(y(), z())))],
        ),
        (
            "BiHomdend8",
            3,
            vec![
                (1, succ(al(x()), succ(y(), z()))),
                (-1, succ(sum(prec(x(), y()), succ(x(), y())), be(z()))),
            ],
        ),
    ]
}

pub fn identity(label: &str) -> (usize, Vec<(i64, Expr)>) {
    identities()
        .into_iter()
        .find(|(l, _, _)| *l == label)
        .map(|(_, a, t)| (a, t))
        .expect("known identity")
}

/// Classical (untwisted) identities, `LHS - RHS`.
pub fn classical(label: &str) -> (usize, Vec<(i64, Expr)>) {
    let t = match label {
        "assoc" => vec![(1, m(m(x(), y()), z())), (-1, m(x(), m(y(), z())))],
        "skew" => vec![(1, m(x(), y())), (1, m(y(), x()))],
        "jacobi" => vec![
            (1, m(x(), m(y(), z()))),
            (1, m(y(), m(z(), x()))),
            (1, m(z(), m(x(), y()))),
        ],
        "leftleibniz" => vec![
            (1, m(x(), m(y(), z()))),
            (-1, m(m(x(), y()), z())),
            (-1, m(y(), m(x(), z()))),
        ],
        "rightleibniz" => vec![
            (1, m(m(x(), y()), z())),
            (-1, m(m(x(), z()), y())),
            (-1, m(x(), m(y(), z()))),
        ],
        // (x, y, z) = (xy)z - x(yz) symmetric in x, y
        "lpL" => vec![
            (1, m(m(x(), y()), z())),
            (-1, m(x(), m(y(), z()))),
            (-1, m(m(y(), x()), z())),
            (1, m(y(), m(x(), z()))),
        ],
        // (x, y, z) symmetric in y, z
        "rpL" => vec![
            (1, m(m(x(), y()), z())),
            (-1, m(x(), m(y(), z()))),
            (-1, m(m(x(), z()), y())),
            (1, m(x(), m(z(), y()))),
        ],
        _ => panic!("unknown classical identity {label}"),
    };
    let arity = if label == "skew" { 2 } else { 3 };
    (arity, t)
}

/// Diagonal operator over `Q`.
pub fn diag(entries: &[Q]) -> LinearOperator {
    LinearOperator::diagonal(Field::Rational, &to_scalars(entries)).unwrap()
}
