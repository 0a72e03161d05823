//! `hopf selftest`: the library's property suites at desk size.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EXIT_OK, EXIT_SELFTEST_FAILED};
use crate::abelian::{group_from_presentation, Presentation};
use crate::enumeration::{sweep, SweepSpec};
use crate::hopf::{
    compose_two_fiber, is_extendable, normalize_to_sl3, pi1_single_gluing, pi1_two_log_transforms,
    random_completion, random_extendable, random_primitive_triple, reduce_to_normal_form,
    reduce_to_standard, standard_form, verify_certificate, zeta_matrix, GluingMatrix,
};
use crate::linalg::{
    gcd_of_k_minors, random_sl3_from, smith_normal_form, IntMatrix, UnimodularMatrix,
};

const SEED: u64 = 20_061_001;

pub struct Suite {
    pub name: &'static str,
    pub run: fn(&mut ChaCha8Rng) -> (usize, usize),
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "snf-minor-gcd",
        run: snf_minor_gcd,
    },
    Suite {
        name: "unimodular-inverse",
        run: unimodular_inverse,
    },
    Suite {
        name: "abelian-row-moves",
        run: abelian_row_moves,
    },
    Suite {
        name: "cross-invariant-agreement",
        run: cross_invariant_agreement,
    },
    Suite {
        name: "unimodularity-forcing",
        run: unimodularity_forcing,
    },
    Suite {
        name: "reduction-certificates",
        run: reduction_certificates,
    },
    Suite {
        name: "extendable-closure",
        run: extendable_closure,
    },
    Suite {
        name: "sweep-determinism",
        run: sweep_determinism,
    },
];

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, entries).expect("shape")
}

fn snf_holds(a: &IntMatrix) -> bool {
    let snf = smith_normal_form(a);
    let Ok(prod) = snf
        .u
        .matrix()
        .multiply(a)
        .and_then(|x| x.multiply(snf.v.matrix()))
    else {
        return false;
    };
    if prod != snf.d {
        return false;
    }
    let diag = snf.diagonal();
    let off_diagonal_zero =
        (0..a.rows()).all(|r| (0..a.cols()).all(|c| r == c || snf.d.get(r, c).is_zero()));
    let chain = diag.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        }
    });
    let non_negative = diag.iter().all(|d| *d >= BigInt::zero());
    let mut running = BigInt::one();
    let minors = (1..=diag.len()).all(|k| {
        running *= &diag[k - 1];
        gcd_of_k_minors(a, k).is_ok_and(|g| g == running)
    });
    off_diagonal_zero && chain && non_negative && minors
}

fn snf_minor_gcd(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut passed = 0;
    let mut total = 0;
    for _ in 0..300 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let a = random_matrix(rng, rows, cols, 6);
        total += 1;
        passed += usize::from(snf_holds(&a));
    }
    (passed, total)
}

fn unimodular_inverse(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut passed = 0;
    let total = 200;
    for _ in 0..total {
        let m = random_sl3_from(rng, 10);
        let inv = m.inverse();
        let id = IntMatrix::identity(3);
        let ok = m.matrix().multiply(inv.matrix()).ok() == Some(id.clone())
            && inv.matrix().multiply(m.matrix()).ok() == Some(id);
        passed += usize::from(ok);
    }
    (passed, total)
}

fn abelian_row_moves(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut passed = 0;
    let total = 200;
    for _ in 0..total {
        let gens = rng.gen_range(1..=3);
        let rels = rng.gen_range(1..=3);
        let rows = random_matrix(rng, rels, gens, 3).to_rows();
        let base = group_from_presentation(&Presentation::new(gens, rows.clone()).unwrap());
        let mut moved = rows.clone();
        moved.reverse();
        moved[0] = moved[0].iter().map(|x| -x).collect();
        if moved.len() > 1 {
            let src = moved[1].clone();
            for (x, y) in moved[0].iter_mut().zip(src) {
                *x += y;
            }
        }
        moved.push(vec![BigInt::zero(); gens]);
        let other = group_from_presentation(&Presentation::new(gens, moved).unwrap());
        passed += usize::from(base == other);
    }
    (passed, total)
}

fn cross_invariant_agreement(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut passed = 0;
    let mut total = 0;
    for _ in 0..150 {
        let plus = random_primitive_triple(rng, 12);
        let minus = random_primitive_triple(rng, 12);
        let direct = pi1_two_log_transforms(&plus, &minus).expect("primitive");
        for _ in 0..2 {
            let p = random_completion(rng, &plus);
            let m = random_completion(rng, &minus);
            total += 1;
            passed += usize::from(pi1_single_gluing(&compose_two_fiber(&p, &m)) == direct);
        }
    }
    (passed, total)
}

fn unimodularity_forcing(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let total = 300;
    let passed = (0..total)
        .filter(|_| {
            let [a, b, p] = random_primitive_triple(rng, 12);
            let minus = random_primitive_triple(rng, 12);
            let rows = vec![vec![&a + &p, b, -p], minus.to_vec()];
            let m = IntMatrix::from_big_rows(rows).expect("2x3");
            smith_normal_form(&m).diagonal()[0].is_one()
        })
        .count();
    (passed, total)
}

fn reduction_certificates(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut passed = 0;
    let mut total = 0;
    let mut inputs = vec![normalize_to_sl3(&zeta_matrix())];
    while inputs.len() < 200 {
        let m = GluingMatrix::from_unimodular(random_sl3_from(rng, 12)).expect("3x3");
        if m.meridian_gcd().is_one() {
            inputs.push(m);
        }
    }
    for m in inputs {
        total += 1;
        let ok = match (reduce_to_normal_form(&m), reduce_to_standard(&m)) {
            (Ok((form, cert)), Ok(std_cert)) => {
                verify_certificate(&cert)
                    && cert.output == form.to_matrix()
                    && form.block().determinant().is_ok_and(|d| d.is_one())
                    && verify_certificate(&std_cert)
                    && std_cert.output == standard_form()
            }
            _ => false,
        };
        passed += usize::from(ok);
    }
    (passed, total)
}

fn extendable_closure(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let total = 200;
    let passed = (0..total)
        .filter(|_| {
            let a = random_extendable(rng);
            let b = random_extendable(rng);
            let inv = UnimodularMatrix::new(a.clone()).map(|u| u.inverse().into_matrix());
            is_extendable(&a.multiply(&b).expect("3x3")) && inv.is_ok_and(|i| is_extendable(&i))
        })
        .count();
    (passed, total)
}

fn sweep_determinism(_: &mut ChaCha8Rng) -> (usize, usize) {
    let specs = [
        SweepSpec::tuples([-1..=1, 0..=1, -2..=2, 1..=1, -1..=1, -2..=2]),
        SweepSpec::matrices(30, 7),
    ];
    let passed = specs
        .into_iter()
        .filter(|spec| {
            let serial = sweep(spec);
            let mut par = spec.clone();
            par.parallel = true;
            let ok = matches!((&serial, sweep(&par)), (Ok(a), Ok(b)) if *a == b);
            ok && serial
                .as_ref()
                .is_ok_and(|o| o.records.iter().all(|r| r.homology_hopf == r.mu.is_one()))
        })
        .count();
    (passed, 2)
}

/// Runs every suite, printing one line per suite and a final summary line.
pub fn run(out: &mut dyn Write) -> i32 {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut all_ok = true;
    for suite in SUITES {
        let (passed, total) = (suite.run)(&mut rng);
        let status = if passed == total { "ok" } else { "FAILED" };
        all_ok &= passed == total;
        let _ = writeln!(out, "{:<28} {passed}/{total} {status}", suite.name);
    }
    if all_ok {
        let _ = writeln!(out, "SELFTEST OK");
        EXIT_OK
    } else {
        let _ = writeln!(out, "SELFTEST FAILED");
        EXIT_SELFTEST_FAILED
    }
}
