use std::path::Path;

use lomat_core::classify::{classify, CaseTag, Case3Report, GcdChecks};
use lomat_core::cone::Cone;
use lomat_core::oracle::{gen_cone_at, gen_structure_data_at, membership_oracle, GenSpec};
use lomat_core::sample::{self, stream_rng, Sample};
use lomat_core::structure::StructureData;
use lomat_core::weinberg::{solve_units, weinberg_pipeline};
use lomat_core::{Error, Frac, Mat};
use serde_json::json;

use crate::cli::{CaseArg, CheckConeArgs, IsoArgs, OracleArgs};
use crate::format::{parse_rows, rows_of, structure_matrices, MatFile, StructureFile};
use crate::report::Report;

fn usage(path: &Path, message: String) -> crate::CliError {
    crate::CliError::Input { path: path.into(), message }
}

fn structure<R: Sample>(path: &Path, file: &StructureFile, report: &mut Report) -> Result<Option<StructureData<R>>, crate::CliError> {
    let (h, d, q) = structure_matrices::<R>(file).map_err(|m| usage(path, m))?;
    Ok(match StructureData::new(h, d, q) {
        Ok(s) => Some(s),
        Err(e) => {
            report.fail(&e);
            None
        }
    })
}

pub fn check_cone<R: Sample>(path: &Path, file: &MatFile, args: &CheckConeArgs) -> Result<Report, crate::CliError> {
    let a: Mat<R> = parse_rows(&file.rows, file.n, "rows").map_err(|m| usage(path, m))?;
    let mut r = Report::new("check-cone", R::KIND, a.n());
    r.set("A", rows_of(&a));
    let neg = a.first_negative().map(|(i, j, v)| format!("A({}, {}) = {v}", i + 1, j + 1));
    r.check("entries nonnegative", neg.is_none(), || neg.clone().unwrap_or_default());
    let det = a.det();
    let det_unit = det.is_unit();
    r.set("det", det.to_string());
    r.check(format!("det={det} unit"), det_unit, || format!("det = {det} is not a unit"));
    let detail = Some(format!("det={det} unit: {det_unit}"));
    match Cone::validate(a) {
        Err(e) => r.fail(&e),
        Ok(cone) if args.samples > 0 => {
            let seed = args.seed.expect("checked by caller");
            let ax = cone.check_axioms(seed, args.samples);
            r.set("axiom_checks", ax.checks);
            r.check(format!("axioms on {} samples", args.samples), ax.passed(), || {
                let f = ax.failure.as_ref().expect("failure present");
                let w: Vec<String> = f.witness.iter().map(|m| m.to_string()).collect();
                format!("{} fails on sample {}: {}", f.axiom, f.sample, w.join(", "))
            });
        }
        Ok(_) => {}
    }
    Ok(r.finish(detail))
}

pub fn verify_structure<R: Sample>(path: &Path, file: &StructureFile) -> Result<Report, crate::CliError> {
    let mut r = Report::new("verify-structure", R::KIND, file.n);
    let Some(s) = structure::<R>(path, file, &mut r)? else {
        return Ok(r.finish(None));
    };
    let n = s.n();
    let cond = s.verify_conditions();
    r.check(format!("structure constants in R+ ({} tuples)", cond.tuples_checked), cond.condition2.is_none(), || {
        let v = cond.condition2.as_ref().expect("violation present");
        let [i, j, k, l] = v.indices.map(|x| x + 1);
        format!("d({j},{k}) q({i},{j}) q({k},{l}) / q({i},{l}) = {} at (i,j,r,s) = ({i},{j},{k},{l})", v.value)
    });
    r.check(
        format!("prod q * det(D)^n = {} is a unit", cond.condition4_value),
        cond.condition4_holds,
        || format!("{} is not a unit of R", cond.condition4_value),
    );
    let law = s.verify_product_law();
    r.check(format!("product law on {} pairs", law.pairs_checked), law.passed(), || {
        let m = law.mismatch.as_ref().expect("mismatch present");
        format!("{:?}: {} != {}", m.indices.map(|x| x + 1), m.product, m.expected)
    });
    r.check("basis linearly independent", s.basis_is_independent(), || format!("rank < {}", n * n));
    match s.expand_identity() {
        Ok(e) => {
            r.set("identity_coefficients", rows_of(&e.k));
            r.set("identity_in_P", e.identity_positive);
        }
        Err(e) => r.fail(&e),
    }
    Ok(r.finish(None))
}

pub fn solve_weinberg<R: Sample>(path: &Path, file: &StructureFile) -> Result<Report, crate::CliError> {
    let (_, _, q) = structure_matrices::<R>(file).map_err(|m| usage(path, m))?;
    let n = q.n();
    let mut r = Report::new("solve-weinberg", R::KIND, n);
    match solve_units(&q) {
        Ok(x) => {
            let verified = x.verify(&q).is_ok();
            r.check(format!("unit system on {} triples", n * n * n), verified, || "solution fails".into());
            let units = x.matrix().entries().all(|(_, _, v)| v.is_positive_unit());
            r.check("entries are positive units", units, || x.matrix().to_string());
            r.set("X", rows_of(x.matrix()));
            r.set("verified", verified && units);
        }
        Err(e) => r.fail(&e),
    }
    Ok(r.finish(None))
}

pub fn weinberg_iso<R: Sample>(path: &Path, file: &StructureFile, args: &IsoArgs) -> Result<Report, crate::CliError> {
    let mut r = Report::new("weinberg-iso", R::KIND, file.n);
    let Some(s) = structure::<R>(path, file, &mut r)? else {
        return Ok(r.finish(None));
    };
    let n = s.n();
    let iso = match weinberg_pipeline(&s) {
        Ok(iso) => iso,
        Err(e) => {
            r.fail(&e);
            return Ok(r.finish(None));
        }
    };
    r.check("identity in P", true, String::new);
    let gens = iso.verify_generators();
    r.check(format!("multiplicative on {} generator pairs", n.pow(4)), gens.is_ok(), || {
        gens.as_ref().err().map(|e| e.to_string()).unwrap_or_default()
    });
    if args.samples > 0 {
        let seed = args.seed.expect("checked by caller");
        let contract = iso.check_contract(seed, args.samples, args.bound);
        r.check(format!("products and joins on {} random pairs", args.samples), contract.is_ok(), || {
            contract.as_ref().err().map(|e| e.to_string()).unwrap_or_default()
        });
    }
    r.set("scalars", rows_of(iso.scalars()));
    r.set("A", rows_of(iso.target().matrix()));
    r.set("verified", r.checks.iter().all(|c| c.pass));
    Ok(r.finish(None))
}

fn gcd_json(g: &GcdChecks) -> serde_json::Value {
    match g {
        GcdChecks::Vacuous => json!("vacuous"),
        GcdChecks::Checked(c) => json!(c),
    }
}

fn case3_json<R: Sample>(rep: &Case3Report<R>) -> serde_json::Value {
    json!({
        "m": rep.m.to_string(),
        "epsilon": rep.epsilon.to_string(),
        "mu": rep.mu.to_string(),
        "mu1": rep.mu1.to_string(),
        "mu2": rep.mu2.to_string(),
        "t": rep.t.to_string(),
        "k": rows_of(&rep.k),
        "gcd_checks": gcd_json(&rep.gcd_checks),
    })
}

pub fn classify2<R: Sample>(path: &Path, file: &StructureFile) -> Result<Report, crate::CliError> {
    let mut r = Report::new("classify2", R::KIND, file.n);
    if file.n != 2 {
        r.fail(&Error::PreconditionFailed(format!("classify2 needs n = 2, got n = {}", file.n)));
        return Ok(r.finish(None));
    }
    let Some(s) = structure::<R>(path, file, &mut r)? else {
        return Ok(r.finish(None));
    };
    let c = match classify(&s) {
        Ok(c) => c,
        Err(e) => {
            r.fail(&e);
            return Ok(r.finish(None));
        }
    };
    let a = c.target();
    let det = a.det();
    r.check(format!("det(A)={det} unit"), det.is_unit(), || format!("det = {det}"));
    r.check("A entrywise nonnegative", a.is_nonneg(), || a.to_string());
    let gens = c.iso.verify_generators();
    r.check("multiplicative on 16 generator pairs", gens.is_ok(), || {
        gens.as_ref().err().map(|e| e.to_string()).unwrap_or_default()
    });
    r.set("case", c.case.name());
    if let CaseTag::Parametric { a, b } = &c.case {
        r.set("parameters", json!({ "a": a.to_string(), "b": b.to_string() }));
    }
    r.set("A", rows_of(a));
    r.set("scalars", rows_of(c.iso.scalars()));
    r.set("verified", r.checks.iter().all(|c| c.pass));
    r.set("case3_report", c.case3_report.as_ref().map(case3_json));
    let detail = Some(format!("case {}", c.case.name()));
    Ok(r.finish(detail))
}

fn parse_param<R: Sample>(text: &str, flag: &str) -> Result<Frac<R>, crate::CliError> {
    text.parse().map_err(|e: Error| crate::CliError::Usage(format!("--{flag}: {e}")))
}

pub fn oracle_run<R: Sample>(args: &OracleArgs) -> Result<Report, crate::CliError> {
    let case = match args.case {
        CaseArg::Usual => CaseTag::Usual,
        CaseArg::Corner => CaseTag::NilpotentCorner,
        CaseArg::Param => CaseTag::Parametric { a: parse_param(&args.a, "a")?, b: parse_param(&args.b, "b")? },
    };
    let spec = GenSpec::<R>::new(args.n, args.seed, args.bound).with_case(case).with_max_attempts(args.max_attempts);
    let mut r = Report::new("oracle-run", R::KIND, args.n);
    r.set("seed", args.seed);
    r.set("index", args.index);
    if args.cone {
        match gen_cone_at(&spec, args.index) {
            Ok(cone) => {
                let a = cone.matrix();
                r.check(format!("det={} unit, entries nonnegative", a.det()), true, String::new);
                if args.samples > 0 {
                    let disagreements = oracle_disagreements(&cone, args.seed, args.samples);
                    r.check(format!("membership agrees with oracle on {} matrices", args.samples), disagreements.is_empty(), || {
                        disagreements.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; ")
                    });
                }
                r.set("cone_A", MatFile::from_mat(R::KIND, a));
            }
            Err(e) => r.fail(&e),
        }
    } else {
        match gen_structure_data_at(&spec, args.index) {
            Ok(s) => {
                let cond = s.verify_conditions();
                r.check("consistency conditions", cond.passed(), || format!("{cond:?}"));
                let law = s.verify_product_law();
                r.check(format!("product law on {} pairs", law.pairs_checked), law.passed(), || format!("{law:?}"));
                r.set("case", spec.case.as_ref().map_or("usual", |c| c.name()));
                let f = StructureFile::from_data(&s);
                r.set("H", f.h);
                r.set("D", f.d);
                r.set("Q", f.q);
            }
            Err(e) => r.fail(&e),
        }
    }
    Ok(r.finish(None))
}

/// Random matrices on which `contains` and the independent oracle differ.
pub fn oracle_disagreements<R: Sample>(cone: &Cone<R>, seed: u64, samples: usize) -> Vec<Mat<R>> {
    let n = cone.n();
    let mut out = Vec::new();
    for k in 0..samples {
        let rng = &mut stream_rng(seed, k as u64);
        // Alternate cone members, signed differences and raw matrices.
        let x = match k % 3 {
            0 => cone.matrix() * &sample::nonneg_matrix(rng, n, 4),
            1 => {
                let u = sample::nonneg_matrix(rng, n, 4);
                let v = sample::nonneg_matrix(rng, n, 4);
                &(cone.matrix() * &u) - &(cone.matrix() * &v)
            }
            _ => sample::matrix(rng, n, 4),
        };
        if cone.contains(&x) != membership_oracle(cone, &x) {
            out.push(x);
        }
    }
    out
}

/// Runs `f` at the ring named by `kind`.
#[macro_export]
macro_rules! dispatch {
    ($kind:expr, $f:ident ( $($arg:expr),* )) => {
        match $kind {
            lomat_core::ring::RingKind::Integers => $f::<lomat_core::Integer>($($arg),*),
            lomat_core::ring::RingKind::Rationals => $f::<lomat_core::Rational>($($arg),*),
            lomat_core::ring::RingKind::QuadraticSqrt2 => $f::<lomat_core::ZSqrt2>($($arg),*),
        }
    };
}

