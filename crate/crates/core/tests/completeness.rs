//! Checking on basis tuples is complete: anything the checkers accept also
//! holds on random vectors, and the F_p enumeration finds exactly the
//! operators a random-vector predicate accepts.

mod common;

use std::collections::BTreeSet;

use bihom_core::algebra::default_basis;
use bihom_core::catalog::catalog_entries;
use bihom_core::checkers::{check_identity, residual, rota_baxter_residual, Identity};
use bihom_core::rota_baxter::{enumerate_rb_fp, SearchConfig};
use bihom_core::{vector, AlgebraInstance, AlgebraKind, BilinearProduct, Field, LinearOperator, Scalar};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn passing_identities(a: &AlgebraInstance) -> Vec<Identity> {
    Identity::ALL
        .into_iter()
        .filter(|id| id.is_dendriform() == (a.kind() == AlgebraKind::BiHomDendriform))
        .filter(|&id| check_identity(a, id).unwrap().is_empty())
        .collect()
}

#[test]
fn accepted_identities_vanish_on_random_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBA515);
    let mut checked = 0;
    for e in catalog_entries() {
        let a = &e.instance;
        for id in passing_identities(a) {
            for _ in 0..100 {
                let args: Vec<Vec<Scalar>> = (0..id.arity())
                    .map(|_| to_scalars(&random_vector(&mut rng, a.dim(), 9)))
                    .collect();
                let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
                let r = residual(a, id, &refs).unwrap();
                assert!(vector::is_zero(&r), "{} {} on {:?}", e.id, id.label(), args);
            }
            checked += 1;
        }
    }
    assert!(checked > 40);
}

fn fp_vector(rng: &mut ChaCha8Rng, f: Field, dim: usize) -> Vec<Scalar> {
    let p = f.modulus().unwrap();
    (0..dim).map(|_| f.from_i64(rng.gen_range(0..p) as i64)).collect()
}

/// Random-vector predicate: 40 pairs, each catching a failing operator with
/// probability at least `1 - 2/p`.
fn rb_on_random_vectors(m: &BilinearProduct, r: &LinearOperator, w: &Scalar, rng: &mut ChaCha8Rng) -> bool {
    let f = m.field();
    (0..40).all(|_| {
        let x = fp_vector(rng, f, m.dim());
        let y = fp_vector(rng, f, m.dim());
        vector::is_zero(&rota_baxter_residual(m, r, w, &x, &y))
    })
}

fn residues(r: &LinearOperator) -> Vec<u64> {
    r.entries().iter().map(|x| x.fp_value().unwrap()).collect()
}

fn all_matrices(f: Field, dim: usize) -> impl Iterator<Item = LinearOperator> {
    let p = f.modulus().unwrap();
    let total = p.pow((dim * dim) as u32);
    (0..total).map(move |mut n| {
        let mut entries = vec![0i64; dim * dim];
        for slot in entries.iter_mut().rev() {
            *slot = (n % p) as i64;
            n /= p;
        }
        LinearOperator::from_fn(f, dim, |r, c| f.from_i64(entries[r * dim + c])).unwrap()
    })
}

#[test]
fn enumeration_matches_random_vector_predicate() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE0);
    let mut instances: Vec<AlgebraInstance> = catalog_entries()
        .into_iter()
        .map(|e| e.instance)
        .filter(|a| a.dim() == 2 && a.products().len() == 1)
        .collect();
    for _ in 0..4 {
        let mut entries = Vec::new();
        for n in 0..8 {
            if rng.gen_bool(0.4) {
                entries.push((n / 4, (n / 2) % 2, n % 2, rng.gen_range(-2..=2)));
            }
        }
        let m = BilinearProduct::from_i64_entries(Field::Rational, 2, &entries).unwrap();
        instances.push(AlgebraInstance::untwisted("rand", AlgebraKind::PlainLie, default_basis(2), m).unwrap());
    }
    for p in [3u64, 5] {
        let f = Field::prime(p).unwrap();
        for a in &instances {
            let Ok(ap) = a.reduce_mod(p) else { continue };
            let m = ap.sole_product().unwrap().1;
            for w in [0, -1, 2] {
                let weight = f.from_i64(w);
                let cfg = SearchConfig::new(p, &weight).unwrap().with_commute_requirement(false);
                let found: BTreeSet<Vec<u64>> = enumerate_rb_fp(&ap, &cfg)
                    .unwrap()
                    .into_iter()
                    .map(|c| residues(c.operator()))
                    .collect();
                let expected: BTreeSet<Vec<u64>> = all_matrices(f, 2)
                    .filter(|r| rb_on_random_vectors(m, r, &weight, &mut rng))
                    .map(|r| residues(&r))
                    .collect();
                assert_eq!(found, expected, "{} mod {p}, weight {w}", a.name());

                let commuting: BTreeSet<Vec<u64>> = expected
                    .iter()
                    .filter(|e| {
                        let r = LinearOperator::from_fn(f, 2, |i, j| f.from_i64(e[i * 2 + j] as i64)).unwrap();
                        r.commutes_with(ap.alpha()).unwrap() && r.commutes_with(ap.beta()).unwrap()
                    })
                    .cloned()
                    .collect();
                let cfg = cfg.with_commute_requirement(true);
                let found: BTreeSet<Vec<u64>> = enumerate_rb_fp(&ap, &cfg)
                    .unwrap()
                    .into_iter()
                    .map(|c| residues(c.operator()))
                    .collect();
                assert_eq!(found, commuting, "{} mod {p}, weight {w}, commuting", a.name());
            }
        }
    }
}
