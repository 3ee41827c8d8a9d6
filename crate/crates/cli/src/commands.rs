use serde::Deserialize;
use serde_json::{json, Value};

use bdtorus::cohomology::{counting_checks, tame_h, RawModule};
use bdtorus::oracle::{cross_check, max_enumerable_level};
use bdtorus::random::{random_tame_module, rng};
use bdtorus::residue::packet_group_level_with;
use bdtorus::symbol::{commutator, hilbert, split_center_image, TameElt, TameField};
use bdtorus::{
    packet_group, validate_with, CoverDatum, Error, Execution, Mat, RawConfig, Result, SharpLattices,
    StabilizationPolicy, ValidateOptions,
};

use crate::report::{basis, group, Report, Status};

/// Flags shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Common {
    pub level: Option<u64>,
    pub max_level: Option<u64>,
    pub stable_repeats: usize,
    pub seed: u64,
    pub cap: Option<u64>,
    pub exec: Execution,
}

impl Common {
    fn validate_options(&self) -> ValidateOptions {
        let mut opts = ValidateOptions::default();
        if let Some(cap) = self.cap {
            opts.closure_cap = usize::try_from(cap).unwrap_or(usize::MAX);
        }
        opts
    }

    fn oracle_cap(&self) -> u64 {
        self.cap.unwrap_or(bdtorus::oracle::DEFAULT_CAP)
    }
}

fn load_datum(text: &str, common: &Common) -> Result<CoverDatum> {
    validate_with(&RawConfig::from_json(text)?, &common.validate_options())
}

/// Runs `body`, folding an error into the report.
fn finish(mut report: Report, body: impl FnOnce(&mut Report) -> Result<()>) -> Report {
    if let Err(e) = body(&mut report) {
        report.fail(&e);
    }
    report
}

pub fn validate(text: &str, common: &Common) -> Report {
    let report = Report::new(json!({ "name": "validate" }), text.as_bytes());
    finish(report, |r| {
        let d = load_datum(text, common)?;
        r.results = json!({
            "rank": d.rank(),
            "q": d.q(),
            "residue_characteristic": d.residue_characteristic(),
            "n": d.n(),
            "ramification_index": d.e(),
            "group_order": d.group_order(),
            "group_exponent": d.group_exponent(),
            "split": d.is_split(),
            "form": d.form().to_i64_rows(),
        });
        Ok(())
    })
}

pub fn sharp(text: &str, common: &Common) -> Report {
    let report = Report::new(json!({ "name": "sharp" }), text.as_bytes());
    finish(report, |r| {
        let d = load_datum(text, common)?;
        let lat = SharpLattices::compute(&d);
        r.results = json!({
            "fixed_basis": basis(&lat.fixed),
            "sharp_basis": basis(&lat.sharp),
            "fixed_sharp_basis": basis(&lat.fixed_sharp),
            "Y_mod_sharp": group(&lat.sharp_quotient()),
            "fixed_sharp_mod_sharp": group(&lat.fixed_sharp_quotient()),
        });
        Ok(())
    })
}

pub fn packet(text: &str, common: &Common) -> Report {
    let command = json!({
        "name": "packet-group",
        "level": common.level,
        "max_level": common.max_level,
        "stable_repeats": common.stable_repeats,
    });
    let report = Report::new(command, text.as_bytes());
    finish(report, |r| {
        let d = load_datum(text, common)?;
        if let Some(m) = common.level {
            let lat = SharpLattices::compute(&d);
            let g = packet_group_level_with(&d, &lat, m)?;
            r.results = json!({ "invariant_factors": group(&g), "levels_used": 1 });
            r.diagnostics["trace"] = json!([{ "level": m, "group": group(&g) }]);
            return Ok(());
        }
        let policy = StabilizationPolicy {
            start_level: None,
            stable_repeats: common.stable_repeats,
            max_level: common.max_level,
        };
        let pg = packet_group(&d, &policy, common.exec)?;
        r.results = json!({ "invariant_factors": group(&pg.group), "levels_used": pg.levels_used() });
        r.diagnostics["trace"] = serde_json::to_value(&pg.trace).expect("trace serializes");
        r.diagnostics["start_level"] = json!(d.group_exponent());
        Ok(())
    })
}

fn module_summary(m: &bdtorus::TameModule, n: Option<u64>) -> Result<Value> {
    let h = tame_h(m);
    let mut v = json!({
        "group": group(&m.group()),
        "e": m.e(),
        "q": m.q().to_string(),
        "tame_h": serde_json::to_value(&h).expect("cohomology serializes"),
    });
    if let Some(n) = n {
        let c = counting_checks(m, n)?;
        v["n"] = json!(n);
        v["counting"] = serde_json::to_value(&c).expect("report serializes");
        v["counting_passed"] = json!(c.passed());
    }
    Ok(v)
}

pub fn cohomology(text: Option<&str>, n_flag: Option<u64>, random: Option<usize>, common: &Common) -> Report {
    if let Some(count) = random {
        let command = json!({ "name": "cohomology", "random": count, "seed": common.seed });
        let report = Report::new(command.clone(), command.to_string().as_bytes());
        return finish(report, |r| {
            let mut g = rng(common.seed);
            let mut modules = Vec::with_capacity(count);
            let mut all_passed = true;
            for _ in 0..count {
                let (m, n) = random_tame_module(&mut g, 1000);
                let v = module_summary(&m, Some(n))?;
                all_passed &= v["counting_passed"] == json!(true);
                modules.push(v);
            }
            r.results = json!({ "modules": modules, "all_passed": all_passed });
            if !all_passed {
                r.status = Status::Mismatch;
            }
            Ok(())
        });
    }
    let text = text.unwrap_or_default();
    let report = Report::new(json!({ "name": "cohomology", "n": n_flag }), text.as_bytes());
    finish(report, |r| {
        let raw = RawModule::from_json(text)?;
        let m = raw.to_module()?;
        r.results = module_summary(&m, n_flag.or(raw.n))?;
        Ok(())
    })
}

fn parse_pair(s: &str) -> Result<TameElt> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Config(format!("expected an element as v,u; got {s:?}"));
    match parts.as_slice() {
        [v, u] => Ok(TameElt { v: v.parse().map_err(|_| bad())?, u: u.parse().map_err(|_| bad())? }),
        _ => Err(bad()),
    }
}

pub fn hilbert_cmd(q: u64, n: u64, a: &str, b: &str) -> Report {
    let command = json!({ "name": "hilbert", "q": q, "n": n, "a": a, "b": b });
    let report = Report::new(command.clone(), command.to_string().as_bytes());
    finish(report, |r| {
        let f = TameField::new(q, n)?;
        let (a, b) = (parse_pair(a)?, parse_pair(b)?);
        let (a, b) = (f.elt(a.v, a.u), f.elt(b.v, b.u));
        r.results = json!({ "value": hilbert(&f, a, b), "minus_one_dlog": f.minus_one_dlog() });
        Ok(())
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CommutatorInput {
    q: u64,
    n: u64,
    form: Vec<Vec<i64>>,
    s: Vec<(i64, i64)>,
    t: Vec<(i64, i64)>,
}

pub fn commutator_cmd(text: &str) -> Report {
    let report = Report::new(json!({ "name": "commutator" }), text.as_bytes());
    finish(report, |r| {
        let input: CommutatorInput = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let rows = input.form.len();
        if input.form.iter().any(|row| row.len() != rows) || rows == 0 {
            return Err(Error::Config("form must be a nonempty square matrix".into()));
        }
        let f = TameField::new(input.q, input.n)?;
        let form = Mat::from_rows(&input.form);
        let s: Vec<TameElt> = input.s.iter().map(|&(v, u)| f.elt(v, u)).collect();
        let t: Vec<TameElt> = input.t.iter().map(|&(v, u)| f.elt(v, u)).collect();
        let value = commutator(&f, &form, &s, &t)?;
        let center = split_center_image(&f, &form)?;
        r.results = json!({
            "value": value,
            "radical_basis": basis(&center.radical),
            "sharp_image_basis": basis(&center.sharp_image),
            "radical_equals_sharp_image": center.equal,
        });
        Ok(())
    })
}

pub fn oracle_check(text: &str, common: &Common) -> Report {
    let command = json!({ "name": "oracle-check", "level": common.level, "cap": common.oracle_cap() });
    let report = Report::new(command, text.as_bytes());
    finish(report, |r| {
        let d = load_datum(text, common)?;
        let cap = common.oracle_cap();
        let levels: Vec<u64> = match common.level {
            Some(m) => vec![m],
            None => (1..=max_enumerable_level(d.q(), d.rank(), cap).unwrap_or(0).min(common.max_level.unwrap_or(4))).collect(),
        };
        let check = cross_check(&d, &levels, cap, common.exec)?;
        r.results = serde_json::to_value(&check).expect("report serializes");
        r.results["passed"] = json!(check.passed());
        if !check.passed() {
            r.status = Status::Mismatch;
        }
        Ok(())
    })
}
