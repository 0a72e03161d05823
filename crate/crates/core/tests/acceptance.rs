//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::io::Cursor;
use std::time::{Duration, Instant};

use common::{
    big, certificate_oracle, cofactor_det, minor_gcd, naive_product, normal_form_shape, rows_of,
    Rows,
};
use hopf_core::abelian::is_isomorphic;
use hopf_core::cli::{self, EXIT_DISAGREEMENT};
use hopf_core::hopf::{
    calibrated_zeta_variant, compose_two_fiber, normalize_to_sl3, pi1_single_gluing,
    pi1_two_log_transforms, presentation_two_log_transforms, random_completion,
    random_primitive_triple, reduce_to_normal_form, reduce_to_standard, standard_form,
    verify_certificate, zeta_matrix, GluingMatrix, ReductionCertificate, ZetaVariant,
};
use hopf_core::linalg::{random_sl3, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    detail: String,
    failures: Vec<String>,
    budget: Option<Duration>,
}

impl Verdict {
    fn new(budget: Option<Duration>) -> Self {
        Self {
            detail: String::new(),
            failures: Vec::new(),
            budget,
        }
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 5 {
            eprintln!("    {msg}");
        }
        self.failures.push(msg);
    }
}

fn report(id: usize, name: &str, body: impl FnOnce(&mut Verdict)) -> bool {
    let mut v = Verdict::new(None);
    let start = Instant::now();
    body(&mut v);
    let elapsed = start.elapsed();
    if let Some(budget) = v.budget {
        if elapsed > budget {
            let msg = format!("runtime {elapsed:.2?} exceeds {budget:?}");
            v.fail(msg);
        }
    }
    let ok = v.failures.is_empty();
    let status = if ok { "PASS" } else { "FAIL" };
    let extra = if ok {
        String::new()
    } else {
        format!(", {} failure(s)", v.failures.len())
    };
    println!(
        "{status} [{id}] {name}: {}{extra} ({elapsed:.2?})",
        v.detail
    );
    ok
}

fn random_rows<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Rows {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| big(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect()
}

fn all_matrices(rows: usize, cols: usize, bound: i64) -> impl Iterator<Item = Rows> {
    let n = rows * cols;
    let width = (2 * bound + 1) as u64;
    (0..width.pow(n as u32)).map(move |mut code| {
        let flat: Vec<BigInt> = (0..n)
            .map(|_| {
                let digit = (code % width) as i64 - bound;
                code /= width;
                big(digit)
            })
            .collect();
        flat.chunks(cols).map(<[BigInt]>::to_vec).collect()
    })
}

fn snf_fault(a: &Rows) -> Option<String> {
    let m = IntMatrix::from_big_rows(a.clone()).unwrap();
    let snf = smith_normal_form(&m);
    let (u, d, v) = (
        rows_of(snf.u.matrix()),
        rows_of(&snf.d),
        rows_of(snf.v.matrix()),
    );
    if !cofactor_det(&u).abs().is_one() || !cofactor_det(&v).abs().is_one() {
        return Some(format!("{a:?}: transform not unimodular"));
    }
    if naive_product(&naive_product(&u, a), &v) != d {
        return Some(format!("{a:?}: u*a*v != d"));
    }
    let r = a.len().min(a[0].len());
    for (i, row) in d.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j && !x.is_zero() {
                return Some(format!("{a:?}: d not diagonal"));
            }
        }
    }
    let diag: Vec<BigInt> = (0..r).map(|i| d[i][i].clone()).collect();
    if diag.iter().any(|x| x.is_negative()) {
        return Some(format!("{a:?}: negative invariant factor"));
    }
    for w in diag.windows(2) {
        let divides = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].is_multiple_of(&w[0])
        };
        if !divides {
            return Some(format!("{a:?}: divisibility chain broken at {:?}", w));
        }
    }
    let mut running = BigInt::one();
    for k in 1..=r {
        running *= &diag[k - 1];
        if running != minor_gcd(a, k) {
            return Some(format!("{a:?}: d_1..d_{k} != gcd of {k}-minors"));
        }
    }
    None
}

fn snf_correctness(v: &mut Verdict) {
    v.budget = Some(Duration::from_secs(60));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut cases: Vec<Rows> = all_matrices(2, 2, 2).chain(all_matrices(2, 3, 2)).collect();
    let exhaustive = cases.len();
    cases.extend((0..20_000).map(|_| random_rows(&mut rng, 3, 3, 2)));
    let shapes = [(2, 2), (2, 3), (3, 3)];
    cases.extend((0..1_000).map(|i| {
        let (r, c) = shapes[i % 3];
        random_rows(&mut rng, r, c, 50)
    }));
    for a in &cases {
        if let Some(msg) = snf_fault(a) {
            v.fail(msg);
        }
    }
    v.detail = format!(
        "{} matrices ({exhaustive} exhaustive 2x2/2x3, 20000 sampled 3x3, 1000 in [-50,50])",
        cases.len()
    );
}

type TriplePair = ([BigInt; 3], [BigInt; 3]);

fn triple_pairs() -> Vec<TriplePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    (0..1_000)
        .map(|_| {
            (
                random_primitive_triple(&mut rng, 20),
                random_primitive_triple(&mut rng, 20),
            )
        })
        .collect()
}

fn presentation_rows(plus: &[BigInt; 3], minus: &[BigInt; 3]) -> Rows {
    let [a, b, p] = plus.clone();
    vec![vec![&a + &p, b, -p], minus.to_vec()]
}

fn pi1_consistency(v: &mut Verdict) {
    v.budget = Some(Duration::from_secs(30));
    let variant = calibrated_zeta_variant();
    if variant != ZetaVariant::Raw {
        v.fail(format!(
            "calibration picked {variant}, the composed route is not the raw gluing"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checks = 0;
    for (plus, minus) in triple_pairs() {
        let direct = pi1_two_log_transforms(&plus, &minus).unwrap();
        let mu = minor_gcd(&presentation_rows(&plus, &minus), 2);
        let expected_rank = if mu.is_zero() { 2 } else { 1 };
        let expected_torsion: Vec<BigInt> = if mu > BigInt::one() {
            vec![mu.clone()]
        } else {
            vec![]
        };
        if direct.rank() != expected_rank
            || direct.invariant_factors() != expected_torsion.as_slice()
        {
            v.fail(format!(
                "{plus:?} {minus:?}: direct group {direct} disagrees with minor oracle"
            ));
        }
        for _ in 0..3 {
            let p = random_completion(&mut rng, &plus);
            let m = random_completion(&mut rng, &minus);
            let composed = compose_two_fiber(&p, &m);
            let glued = pi1_single_gluing(&composed);
            checks += 1;
            if !is_isomorphic(&glued, &direct) {
                v.fail(format!(
                    "{plus:?} {minus:?}: composed {glued} vs direct {direct} (exit {EXIT_DISAGREEMENT} path)"
                ));
            }
        }
    }
    v.detail = format!("{checks}/3000 completions agree, zeta variant {variant}");
}

fn unimodularity_forcing(v: &mut Verdict) {
    let mut count = 0;
    for (plus, minus) in triple_pairs() {
        let rows = presentation_rows(&plus, &minus);
        let presentation = presentation_two_log_transforms(&plus, &minus).unwrap();
        if presentation.relation_matrix().map(|m| rows_of(&m)) != Some(rows.clone()) {
            v.fail(format!("{plus:?} {minus:?}: unexpected presentation"));
        }
        let first = smith_normal_form(&IntMatrix::from_big_rows(rows.clone()).unwrap()).diagonal()
            [0]
        .clone();
        if !first.is_one() || !minor_gcd(&rows, 1).is_one() {
            v.fail(format!(
                "{plus:?} {minus:?}: first invariant factor {first}"
            ));
        }
        count += 1;
    }
    v.detail = format!("first invariant factor 1 in {count}/1000 presentations");
}

fn reduction_inputs() -> Vec<GluingMatrix> {
    let mut inputs = vec![normalize_to_sl3(&zeta_matrix())];
    let mut seed = 0u64;
    while inputs.len() < 1_001 {
        let m = GluingMatrix::from_unimodular(random_sl3(seed, 12)).unwrap();
        seed += 1;
        if m.meridian_gcd().is_one() {
            inputs.push(m);
        }
    }
    inputs
}

fn certificate_rows(c: &ReductionCertificate) -> (Rows, Vec<Rows>, Vec<Rows>, Rows) {
    (
        rows_of(c.input.matrix()),
        c.left_factors.iter().map(rows_of).collect(),
        c.right_factors.iter().map(rows_of).collect(),
        rows_of(&c.output),
    )
}

fn oracle_accepts(c: &ReductionCertificate) -> bool {
    let (i, l, r, o) = certificate_rows(c);
    certificate_oracle(&i, &l, &r, &o)
}

fn normal_form_reduction(v: &mut Verdict) {
    v.budget = Some(Duration::from_secs(30));
    let inputs = reduction_inputs();
    let n0 = rows_of(&standard_form());
    for m in &inputs {
        match (reduce_to_normal_form(m), reduce_to_standard(m)) {
            (Ok((form, cert)), Ok(std_cert)) => {
                let out = rows_of(&cert.output);
                let block = rows_of(&form.block());
                if !verify_certificate(&cert) || !oracle_accepts(&cert) {
                    v.fail(format!("{}: normal-form certificate rejected", m.matrix()));
                }
                if !normal_form_shape(&out) || !cofactor_det(&block).is_one() {
                    v.fail(format!(
                        "{}: output {} lacks normal-form shape",
                        m.matrix(),
                        cert.output
                    ));
                }
                if !verify_certificate(&std_cert)
                    || !oracle_accepts(&std_cert)
                    || rows_of(&std_cert.output) != n0
                {
                    v.fail(format!(
                        "{}: standard reduction does not reach N0",
                        m.matrix()
                    ));
                }
            }
            (a, b) => v.fail(format!(
                "{}: reduction failed: {:?} {:?}",
                m.matrix(),
                a.err(),
                b.err()
            )),
        }
    }
    v.detail = format!(
        "{} inputs (zeta plus 1000 random_sl3 with gcd(g,h)=1)",
        inputs.len()
    );
}

fn run_cli(args: &[&str], stdin: &str) -> (i32, String) {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hopf").chain(args.iter().copied());
    let code = cli::run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

const ZETA_GOLDEN: &str = r#"{
  "convention": "columns-are-images-alpha-beta-gamma",
  "det": -1,
  "g": 1,
  "gcd": 1,
  "group": {
    "invariant_factors": [],
    "rank": 1
  },
  "h": 0,
  "homology_hopf": true,
  "matrix": [
    [1, 0, 1],
    [0, 1, 0],
    [0, 0, -1]
  ],
  "zeta_variant": "zeta"
}
"#;

const TORSION_GOLDEN: &str = r#"{
  "convention": "columns-are-images-alpha-beta-gamma",
  "det": 1,
  "g": 2,
  "gcd": 2,
  "group": {
    "invariant_factors": [2],
    "rank": 1
  },
  "h": 4,
  "homology_hopf": false,
  "matrix": [
    [1, 0, 2],
    [0, 1, 4],
    [0, 0, 1]
  ],
  "zeta_variant": "zeta"
}
"#;

fn homology_hopf_classification(v: &mut Verdict) {
    let cases = [
        (
            "zeta",
            r#"{"matrix": [[1, 0, 1], [0, 1, 0], [0, 0, -1]]}"#,
            ZETA_GOLDEN,
        ),
        (
            "column (2,4,1)",
            r#"{"matrix": [[1, 0, 2], [0, 1, 4], [0, 0, 1]]}"#,
            TORSION_GOLDEN,
        ),
    ];
    for (name, doc, golden) in cases {
        let (code, out) = run_cli(&["classify"], doc);
        if code != 0 || out != golden {
            v.fail(format!(
                "{name}: exit {code}, output differs from golden:\n{out}"
            ));
        }
    }
    v.detail = "zeta gives Z and homology Hopf; column (2,4,1) gives Z + Z/2".into();
}

fn multiplicity_zero_coverage(v: &mut Verdict) {
    let args = [
        "sweep",
        "--direction-plus",
        "1,0",
        "--direction-minus",
        "1,0",
        "--p-range",
        "0:2",
        "--q-range",
        "0:2",
    ];
    let (code, first) = run_cli(&args, "");
    let (_, second) = run_cli(&args, "");
    let mut par_args = args.to_vec();
    par_args.push("--parallel");
    let (_, parallel) = run_cli(&par_args, "");
    if code != 0 {
        v.fail(format!("sweep exited {code}"));
    }
    if first != second || first != parallel {
        v.fail("CSV not byte-identical across runs or serial/parallel".into());
    }
    let mut lines = first.lines();
    if lines.next() != Some(cli::CSV_HEADER) {
        v.fail("missing CSV header".into());
    }
    let mut zero_multiplicity_hopf = 0;
    let mut rows = 0;
    for line in lines {
        rows += 1;
        let f: Vec<&str> = line.split(',').collect();
        let p: i64 = f[2].parse().unwrap();
        let q: i64 = f[5].parse().unwrap();
        let closed_form = (p + q + p * q).abs();
        let oracle = minor_gcd(&common::rows_i64(&[vec![1 + p, 0, -p], vec![1, 0, q]]), 2);
        if oracle != big(closed_form) || f[6] != closed_form.to_string() {
            v.fail(format!("p={p} q={q}: mu {} vs oracle {oracle}", f[6]));
        }
        let hopf = f[7] == "true";
        if hopf != (closed_form == 1) {
            v.fail(format!("p={p} q={q}: homology_hopf {hopf}"));
        }
        zero_multiplicity_hopf += usize::from(hopf && (p == 0 || q == 0));
    }
    if rows != 9 {
        v.fail(format!("expected 9 rows, got {rows}"));
    }
    if zero_multiplicity_hopf == 0 {
        v.fail("no homology-Hopf row with a zero multiplicity".into());
    }
    v.detail = format!(
        "{rows} cells match |p+q+pq|, {zero_multiplicity_hopf} homology-Hopf rows with p=0 or q=0, CSV stable"
    );
}

fn tamper_detection(v: &mut Verdict) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let inputs = reduction_inputs();
    let (mut broken, mut coincidences, mut caught) = (0usize, 0usize, 0usize);
    for m in inputs.iter().skip(1).take(100) {
        let cert = if rng.gen_bool(0.5) {
            reduce_to_standard(m).unwrap()
        } else {
            reduce_to_normal_form(m).unwrap().1
        };
        let left = cert.left_factors.len();
        let right = cert.right_factors.len();
        for slot in 0..=left + right {
            for (r, c) in (0..3).flat_map(|r| (0..3).map(move |c| (r, c))) {
                let delta = big(if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=5));
                let mut t = cert.clone();
                let target = if slot < left {
                    &mut t.left_factors[slot]
                } else if slot < left + right {
                    &mut t.right_factors[slot - left]
                } else {
                    &mut t.output
                };
                let entry = target.get(r, c) + &delta;
                target.set(r, c, entry);
                let valid = oracle_accepts(&t);
                if valid {
                    coincidences += 1;
                } else {
                    broken += 1;
                    if verify_certificate(&t) {
                        v.fail(format!(
                            "{}: mutation at slot {slot} ({r},{c}) accepted",
                            m.matrix()
                        ));
                    } else {
                        caught += 1;
                    }
                }
                if valid && !verify_certificate(&t) {
                    v.fail(format!(
                        "{}: valid mutation at slot {slot} rejected",
                        m.matrix()
                    ));
                }
            }
        }
    }
    v.detail = format!(
        "{caught}/{broken} broken mutations rejected, {coincidences} coincidental repairs filtered"
    );
}

fn main() {
    println!("acceptance suite");
    type Criterion = (&'static str, fn(&mut Verdict));
    let criteria: [Criterion; 7] = [
        ("SNF correctness", snf_correctness),
        ("pi_1 formula consistency", pi1_consistency),
        ("unimodularity forcing", unimodularity_forcing),
        ("normal-form reduction", normal_form_reduction),
        ("homology-Hopf classification", homology_hopf_classification),
        ("multiplicity-zero coverage", multiplicity_zero_coverage),
        ("certificate tamper detection", tamper_detection),
    ];
    let mut passed = 0;
    for (i, (name, body)) in criteria.iter().enumerate() {
        passed += usize::from(report(i + 1, name, body));
    }
    println!("{passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
