//! One function per subcommand, each returning a JSON report.

use bdcover::bdinv::{cind_bound, finite_invariants, is_sharp, r_group, sharp_lattices, xqn_isomorphism, zind_lattice};
use bdcover::bdinv::{BDDatum, TorusDatum};
use bdcover::cover::{center, CenterData, CoverSpec};
use bdcover::cyclotomic::Cyclotomic;
use bdcover::hecke::{is_commutative, structure_table, HeckeSpec};
use bdcover::localfield::{hilbert, LocalFieldSpec, MuN, SymbolConvention};
use bdcover::par::Exec;
use bdcover::reps::{
    build_irrep, genuine_characters, global_multiplicity_bound, is_unramified, CoverSubgroup,
    GenuineCharacter, GlobalBoundInput, MonomialMatrix,
};
use bdcover::verify::{all_suites, Grid, PropertyReport, VerifyConfig};
use bdcover::zlattice::{FiniteAbelianGroup, IntMatrix, Lattice, QmodZ};
use bdcover::Error;
use num_integer::Integer;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::schema::{BoundInput, CharacterChoice, CoverInput, DatumInput, HeckeInput, HilbertInput, IrrepInput, SchemaError};
use crate::CliError;

fn lib_error(e: Error, pointer: &str) -> CliError {
    match e {
        Error::Unsupported(m) => CliError::Unsupported(m),
        Error::InvalidField(_)
        | Error::InvalidDatum(_)
        | Error::WrongOrder { .. }
        | Error::NotUnimodular
        | Error::DimensionMismatch(_)
        | Error::NotGenuine(_)
        | Error::MissingInput(_) => CliError::Schema(SchemaError::new(pointer, e.to_string())),
        other => CliError::Failure(other.to_string()),
    }
}

fn at(pointer: &'static str) -> impl Fn(Error) -> CliError {
    move |e| lib_error(e, pointer)
}

fn datum(d: &DatumInput) -> Result<BDDatum, CliError> {
    let torus = TorusDatum::new(d.rank, IntMatrix::from_rows(&d.frobenius), d.order).map_err(at("/frobenius"))?;
    BDDatum::new(torus, IntMatrix::from_rows(&d.c), d.n).map_err(at("/C"))
}

fn field(q: u64, n: u64, conv: SymbolConvention) -> Result<LocalFieldSpec, CliError> {
    Ok(LocalFieldSpec::new(q, n).map_err(at("/q"))?.with_convention(conv))
}

fn cover(c: &CoverInput, conv: SymbolConvention) -> Result<CoverSpec, CliError> {
    CoverSpec::new(field(c.q, c.datum.n, conv)?, datum(&c.datum)?).map_err(at(""))
}

fn rows(l: &Lattice) -> Result<Value, CliError> {
    let r = l.basis().to_i64_rows().map_err(at(""))?;
    Ok(json!(r))
}

fn factors(g: &FiniteAbelianGroup) -> Value {
    json!(g.factors())
}

fn zeta(k: u64) -> Value {
    json!({ "zeta_exponent": k })
}

fn mu(m: MuN) -> Value {
    zeta(m.exponent())
}

pub fn invariants(input: &DatumInput) -> Result<Value, CliError> {
    let d = datum(input)?;
    let sharp = sharp_lattices(&d);
    let fi = finite_invariants(&d).map_err(at(""))?;
    let rg = r_group(&d).map_err(at(""))?;
    let xqn = xqn_isomorphism(&d).map_err(at(""))?;
    Ok(json!({
        "Ysharp": rows(&sharp.ysharp)?,
        "Xsharp_numerators": rows(&sharp.xsharp)?,
        "denominator": d.n(),
        "is_sharp": is_sharp(&d),
        "zind": zind_lattice(&d).map_err(at(""))?,
        "cind_bound": cind_bound(&d).map_err(at(""))?,
        "mu": factors(&fi.mu),
        "nu": factors(&fi.nu),
        "nu_hat": factors(&fi.nu_hat),
        "t_n": factors(&fi.t_n),
        "t_hat_n": factors(&fi.t_hat_n),
        "r_group": {
            "torsion": factors(&rg.torsion),
            "free_rank": rg.free_rank,
            "component_group": factors(&rg.component_group),
        },
        "xqn": {
            "domain": factors(&xqn.domain),
            "codomain": factors(&xqn.codomain),
            "bijective": xqn.hom.is_injective() && xqn.domain.order() == xqn.codomain.order(),
        },
    }))
}

pub fn center_report(input: &CoverInput, conv: SymbolConvention) -> Result<Value, CliError> {
    let s = cover(input, conv)?;
    let c = center(&s).map_err(at(""))?;
    Ok(json!({
        "coordinates": "valuations then unit exponents",
        "Zdagger": c.zdag_generators(),
        "core": c.core_generators(),
        "quotient": factors(c.quotient.group()),
        "quotient_order": c.quotient.group().order(),
        "zind": c.zind,
        "cind": c.cind,
    }))
}

pub fn hecke_table(input: &HeckeInput, conv: SymbolConvention) -> Result<Value, CliError> {
    let f = field(input.cover.q, input.cover.datum.n, conv)?;
    let spec = HeckeSpec::new(f, datum(&input.cover.datum)?).map_err(at(""))?;
    let bound = input.bound as i64;
    let mut table = structure_table(&spec, bound).map_err(at(""))?;
    table.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    let entries: Vec<Value> = table
        .iter()
        .map(|(y1, y2, c)| json!({"y1": y1, "y2": y2, "zeta_exponent": c.exponent()}))
        .collect();
    Ok(json!({
        "lambda": rows(spec.lambda())?,
        "bound": input.bound,
        "commutative": is_commutative(&spec, bound).map_err(at(""))?,
        "entries": entries,
    }))
}

fn choose_character(s: &CoverSpec, c: &CenterData, choice: &CharacterChoice) -> Result<(GenuineCharacter, Option<usize>), CliError> {
    match choice {
        CharacterChoice::Index { index, free_denominator } => {
            let mut all = genuine_characters(s, c, *free_denominator).map_err(at("/free_denominator"))?;
            let count = all.len();
            if *index >= count {
                return Err(CliError::Schema(SchemaError::new(
                    "/character_index",
                    format!("only {count} characters are enumerated"),
                )));
            }
            Ok((all.swap_remove(*index), Some(count)))
        }
        CharacterChoice::Values(vals) => {
            let group = CoverSubgroup::new(s, c.zdag.clone()).map_err(at(""))?;
            if vals.len() != group.rank() {
                return Err(CliError::Schema(SchemaError::new(
                    "/character",
                    format!("expected {} values, one per center generator", group.rank()),
                )));
            }
            Ok((GenuineCharacter::new(group, vals.clone()).map_err(at("/character"))?, None))
        }
    }
}

/// Exponent of `exp(2πi x)` as a power of `ζ_order`.
fn exponent_in(x: QmodZ, order: u64) -> u64 {
    (x.num() * (order as i64 / x.den())) as u64
}

pub fn irrep(input: &IrrepInput, conv: SymbolConvention) -> Result<Value, CliError> {
    let s = cover(&input.cover, conv)?;
    let c = center(&s).map_err(at(""))?;
    let (chi, count) = choose_character(&s, &c, &input.character)?;
    let pi = build_irrep(&s, &chi).map_err(at(""))?;
    let gens: Vec<(Vec<i64>, MonomialMatrix)> = pi.generator_matrices().map_err(at(""))?;

    // Center generators first, then one lift per class of T/Z†.
    let mut points = c.zdag_generators();
    for a in c.quotient.group().elements() {
        let z = c.lift(&a);
        if !points.contains(&z) {
            points.push(z);
        }
    }
    let mut table = Vec::with_capacity(points.len());
    for z in points {
        let trace = pi.matrix_eff(&z, 0).map_err(at(""))?.trace();
        let value = if c.is_central_eff(&z) {
            Some(pi.central_char().eval_eff(&z, 0).map_err(at(""))?)
        } else {
            None
        };
        table.push((z, trace, value));
    }

    let mut order = chi.values().iter().fold(1i64, |l, v| l.lcm(&v.den()));
    for (_, m) in &gens {
        order = m.phases.iter().fold(order, |l, p| l.lcm(&p.den()));
    }
    for (_, _, v) in &table {
        if let Some(v) = v {
            order = order.lcm(&v.den());
        }
    }
    let order = order as u64;
    let dim = pi.dimension();

    let mut char_rows = Vec::with_capacity(table.len());
    for (z, trace, value) in &table {
        let expected = match value {
            Some(v) => Cyclotomic::root_of_unity(*v, order).scale(&BigRational::from_integer((dim as i64).into())),
            None => Cyclotomic::zero(1),
        };
        if !trace.sub(&expected).is_zero() {
            return Err(CliError::Failure(format!("character at {z:?} is not the induced value")));
        }
        char_rows.push(json!({
            "element": z,
            "value": value.map(|v| json!({"multiplicity": dim, "zeta_exponent": exponent_in(v, order)})),
        }));
    }

    let generators: Vec<Value> = gens
        .iter()
        .map(|(z, m)| {
            json!({
                "element": z,
                "permutation": m.perm,
                "phases": m.phases.iter().map(|&p| zeta(exponent_in(p, order))).collect::<Vec<_>>(),
            })
        })
        .collect();

    let mut out = json!({
        "coordinates": "valuations then unit exponents",
        "dimension": dim,
        "zeta_order": order,
        "center_generators": c.zdag_generators(),
        "central_character": chi.values().iter().map(|&v| zeta(exponent_in(v, order))).collect::<Vec<_>>(),
        "unramified": is_unramified(&s, &c, &chi).map_err(at(""))?,
        "coset_reps": pi.coset_reps(),
        "generators": generators,
        "character_table": char_rows,
    });
    if let Some(count) = count {
        out["character_count"] = json!(count);
    }
    Ok(out)
}

pub fn hilbert_symbol(input: &HilbertInput, conv: SymbolConvention) -> Result<Value, CliError> {
    let f = field(input.q, input.n, conv)?;
    let a = f.element(input.a.val, input.a.unit_exp);
    let b = f.element(input.b.val, input.b.unit_exp);
    Ok(mu(hilbert(&f, &a, &b)))
}

pub fn mult_bound(input: &BoundInput) -> Result<Value, CliError> {
    let g = GlobalBoundInput {
        is_split: input.is_split,
        ker_sha: input.ker_sha,
        sha_n: input.sha_n,
    };
    Ok(json!({ "bound": global_multiplicity_bound(&g).map_err(at(""))? }))
}

/// Outcome of the self-test: the report and whether every property held.
pub struct SelftestOutcome {
    pub report: Value,
    pub failures: Vec<PropertyReport>,
    pub warnings: Vec<String>,
}

pub fn selftest(grid: Grid, conv: SymbolConvention, sign_flip: bool) -> SelftestOutcome {
    let cfg = VerifyConfig {
        grid,
        exec: Exec::Parallel,
        convention: conv,
        mutated: sign_flip,
        ..Default::default()
    };
    let reports = all_suites(&cfg);
    let mut warnings = Vec::new();
    if reports.iter().all(PropertyReport::is_vacuous) {
        warnings.push(format!("grid {grid} has no instances; every property holds vacuously"));
    } else {
        for r in reports.iter().filter(|r| r.is_vacuous()) {
            warnings.push(format!("{}/{} ran no cases", r.module, r.name));
        }
    }
    if sign_flip {
        warnings.push("the symbol sign term was removed for this run".into());
    }
    let props: Vec<Value> = reports
        .iter()
        .map(|r| {
            let status = match (&r.witness, r.is_vacuous()) {
                (Some(_), _) => "fail",
                (None, true) => "vacuous",
                (None, false) => "pass",
            };
            json!({
                "module": r.module,
                "name": r.name,
                "cases": r.cases,
                "status": status,
                "witness": r.witness,
            })
        })
        .collect();
    let failures: Vec<PropertyReport> = reports.into_iter().filter(|r| !r.passed()).collect();
    let report = json!({
        "grid": grid.to_string(),
        "symbol_convention": conv.to_string(),
        "passed": failures.is_empty(),
        "properties": props,
        "warnings": warnings,
    });
    SelftestOutcome {
        report,
        failures,
        warnings,
    }
}
