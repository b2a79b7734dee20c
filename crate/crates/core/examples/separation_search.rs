//! Exhaustive search over 2-dimensional brackets on F_3 for instances whose
//! structure maps are not both bijective and which separate the BiHom-Lie
//! identity set from the left (or right) BiHom-Lie one.
//!
//! Maps range over a fixed list of small operators containing singular
//! ones; every commuting pair with at least one singular map is paired with
//! every bracket tensor (3^8 of them) that passes the preamble and
//! BiHom-skew-symmetry.

use bihom_core::algebra::{default_basis, validate_preamble};
use bihom_core::checkers::{
    check_bihom_jacobi, check_bihom_skew_symmetry, check_left_bihom_leibniz, check_right_bihom_leibniz,
};
use bihom_core::{AlgebraInstance, AlgebraKind, BilinearProduct, Field, LinearOperator};

fn main() {
    let f = Field::prime(3).unwrap();
    let op = |rows: &[&[i64]]| LinearOperator::from_i64_rows(f, rows).unwrap();
    let maps = [
        ("0", op(&[&[0, 0], &[0, 0]])),
        ("E11", op(&[&[1, 0], &[0, 0]])),
        ("E22", op(&[&[0, 0], &[0, 1]])),
        ("N", op(&[&[0, 1], &[0, 0]])),
        ("Nt", op(&[&[0, 0], &[1, 0]])),
        ("diag(2,0)", op(&[&[2, 0], &[0, 0]])),
        ("id", op(&[&[1, 0], &[0, 1]])),
        ("diag(1,2)", op(&[&[1, 0], &[0, 2]])),
        ("diag(2,1)", op(&[&[2, 0], &[0, 1]])),
        ("1+N", op(&[&[1, 1], &[0, 1]])),
    ];
    let tensors: Vec<BilinearProduct> = (0..3u32.pow(8))
        .map(|mut n| {
            let mut entries = Vec::new();
            for slot in 0..8 {
                entries.push((slot / 4, (slot / 2) % 2, slot % 2, (n % 3) as i64));
                n /= 3;
            }
            BilinearProduct::from_i64_entries(f, 2, &entries).unwrap()
        })
        .collect();

    let mut eligible = 0u64;
    let mut lie_not_left = 0u64;
    let mut left_not_lie = 0u64;
    let mut lie_not_right = 0u64;
    let mut right_not_lie = 0u64;
    let mut first: [Option<String>; 4] = Default::default();
    for (an, a) in &maps {
        for (bn, b) in &maps {
            if (a.is_invertible() && b.is_invertible()) || !a.commutes_with(b).unwrap() {
                continue;
            }
            for m in &tensors {
                let inst = AlgebraInstance::with_single_product(
                    "t",
                    AlgebraKind::BiHomLie,
                    default_basis(2),
                    m.clone(),
                    a.clone(),
                    b.clone(),
                )
                .unwrap();
                if !validate_preamble(&inst).is_empty() || !check_bihom_skew_symmetry(&inst).unwrap().is_empty() {
                    continue;
                }
                eligible += 1;
                let jacobi = check_bihom_jacobi(&inst).unwrap().is_empty();
                let left = check_left_bihom_leibniz(&inst).unwrap().is_empty();
                let right = check_right_bihom_leibniz(&inst).unwrap().is_empty();
                let describe = || {
                    let consts: Vec<String> = m
                        .nonzero_entries()
                        .map(|(i, j, k, c)| format!("c[{i}][{j}][{k}]={c}"))
                        .collect();
                    format!("alpha={an}, beta={bn}, {}", consts.join(" "))
                };
                for (slot, hit, counter) in [
                    (0, jacobi && !left, &mut lie_not_left),
                    (1, left && !jacobi, &mut left_not_lie),
                    (2, jacobi && !right, &mut lie_not_right),
                    (3, right && !jacobi, &mut right_not_lie),
                ] {
                    if hit {
                        *counter += 1;
                        first[slot].get_or_insert_with(describe);
                    }
                }
            }
        }
    }
    println!("eligible instances (preamble + BHskewsym, some map singular): {eligible}");
    let names = [
        "BiHomLie but not left BiHom-Lie",
        "left BiHom-Lie but not BiHomLie",
        "BiHomLie but not right BiHom-Lie",
        "right BiHom-Lie but not BiHomLie",
    ];
    let counts = [lie_not_left, left_not_lie, lie_not_right, right_not_lie];
    for ((name, count), example) in names.iter().zip(counts).zip(&first) {
        println!("{name}: {count}");
        if let Some(e) = example {
            println!("  first: {e}");
        }
    }
}
