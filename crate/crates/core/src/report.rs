//! Jobs run by the command line tool and the reports they produce.
//!
//! A [`Report`] serializes to `{"kind", "input", "result", "warnings"}`.
//! Integers at or above `2^53` are written as decimal strings so that readers
//! using doubles lose nothing; [`Report::from_json`] reverses that.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::arith::SizeGuard;
use crate::boseck::BoseckTable;
use crate::covers::{cyclic_semigroup_with, ArtinSchreierCover, CyclicCoverSpec, RamifiedPlace};
use crate::error::{Error, Result};
use crate::filtration;
use crate::invariants::{self, CurveCheckInput};
use crate::semigroup::{GapSet, NumericalSemigroup};

const EXACT_JSON_LIMIT: u64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum JobSpec {
    Semigroup {
        gens: Vec<u64>,
    },
    ArtinSchreier {
        p: u64,
        h: u32,
        m: u64,
        base_gaps: Vec<u64>,
    },
    Cyclic {
        p: u64,
        n: u32,
        places: Vec<Vec<u64>>,
        at: usize,
    },
    Filtration {
        poles: Vec<u64>,
    },
    Check {
        gens: Vec<u64>,
        p: u64,
        q: Option<u64>,
        nilpotency: Option<u32>,
        points: Option<u64>,
    },
}

impl JobSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            JobSpec::Semigroup { .. } => "semigroup",
            JobSpec::ArtinSchreier { .. } => "artin-schreier",
            JobSpec::Cyclic { .. } => "cyclic",
            JobSpec::Filtration { .. } => "filtration",
            JobSpec::Check { .. } => "check",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub spec: JobSpec,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut input = serde_json::to_value(&self.spec).expect("job spec serializes");
        if let Value::Object(map) = &mut input {
            map.remove("kind");
        }
        let mut out = json!({
            "kind": self.spec.kind(),
            "input": input,
            "result": self.result,
            "warnings": self.warnings,
        });
        stringify_large_ints(&mut out);
        out
    }

    /// Recovers the job and its output from [`to_json`](Self::to_json).
    pub fn from_json(value: &Value) -> Result<Report> {
        let bad = |what: &str| Error::InvalidArgument(format!("malformed report: {what}"));
        let obj = value.as_object().ok_or_else(|| bad("not an object"))?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("kind"))?;
        let mut input = obj.get("input").cloned().ok_or_else(|| bad("input"))?;
        restore_large_ints(&mut input);
        let Value::Object(mut map) = input else {
            return Err(bad("input is not an object"));
        };
        map.insert("kind".into(), Value::String(kind.to_string()));
        let spec: JobSpec =
            serde_json::from_value(Value::Object(map)).map_err(|e| bad(&e.to_string()))?;
        let mut result = obj.get("result").cloned().ok_or_else(|| bad("result"))?;
        restore_large_ints(&mut result);
        let warnings = obj
            .get("warnings")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("warnings"))?
            .iter()
            .map(|w| w.as_str().map(str::to_string).ok_or_else(|| bad("warning")))
            .collect::<Result<_>>()?;
        Ok(Report {
            spec,
            result,
            warnings,
        })
    }

    /// `key: value` lines for terminal output.
    pub fn to_table(&self) -> String {
        let mut out = format!("kind: {}\n", self.spec.kind());
        if let Value::Object(map) = &self.result {
            render_object(map, "", &mut out);
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn render_object(map: &Map<String, Value>, prefix: &str, out: &mut String) {
    for (key, value) in map {
        let key = if prefix.is_empty() {
            key.clone()
        } else {
            format!("{prefix}.{key}")
        };
        match value {
            Value::Object(inner) => render_object(inner, &key, out),
            other => out.push_str(&format!("{key}: {}\n", render_scalar(other))),
        }
    }
}

fn render_scalar(value: &Value) -> String {
    match value {
        Value::Null => "n/a".into(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_scalar).collect();
            format!("{{{}}}", parts.join(", "))
        }
        Value::Number(n) => n.to_string(),
        Value::Object(_) => value.to_string(),
    }
}

fn stringify_large_ints(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(u) = n.as_u64().filter(|&u| u >= EXACT_JSON_LIMIT) {
                *value = Value::String(u.to_string());
            }
        }
        Value::Array(items) => items.iter_mut().for_each(stringify_large_ints),
        Value::Object(map) => map.values_mut().for_each(stringify_large_ints),
        _ => {}
    }
}

fn restore_large_ints(value: &mut Value) {
    match value {
        Value::String(s) => {
            if let Some(u) = s.parse::<u64>().ok().filter(|&u| u >= EXACT_JSON_LIMIT) {
                *value = Value::from(u);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(restore_large_ints),
        Value::Object(map) => map.values_mut().for_each(restore_large_ints),
        _ => {}
    }
}

fn semigroup_summary(h: &NumericalSemigroup) -> Value {
    json!({
        "gaps": h.gaps(),
        "genus": h.genus(),
        "frobenius": h.frobenius(),
        "conductor": h.conductor(),
        "multiplicity": h.multiplicity(),
        "generators": h.generators(),
        "symmetric": h.is_symmetric().ok(),
    })
}

pub fn run_job(spec: &JobSpec, guard: SizeGuard) -> Result<Report> {
    let mut warnings = Vec::new();
    let result = match spec {
        JobSpec::Semigroup { gens } => {
            let h = NumericalSemigroup::from_generators_with(gens, guard)?;
            if h.genus() == 0 {
                warnings.push("symmetry is not defined for genus 0".to_string());
            }
            semigroup_summary(&h)
        }
        JobSpec::ArtinSchreier { p, h, m, base_gaps } => {
            let base = GapSet::from_unsorted(base_gaps.clone())?;
            let cover = ArtinSchreierCover::with_guard(*p, *h, *m, base, guard)?;
            let out = cover.lewittes_gaps()?;
            warnings.extend(out.warnings());
            let semigroup = match out.semigroup() {
                Ok(sg) => semigroup_summary(&sg),
                Err(e) => {
                    warnings.push(format!("gap set does not close to a semigroup: {e}"));
                    Value::Null
                }
            };
            json!({
                "q": cover.degree(),
                "gaps": out.gaps,
                "genus": out.genus,
                "riemann_hurwitz_genus": cover.riemann_hurwitz_genus()?,
                "index_zero_gaps": out.index_zero_contribution(),
                "semigroup": semigroup,
            })
        }
        JobSpec::Cyclic { p, n, places, at } => {
            let cover = CyclicCoverSpec::with_guard(
                *p,
                *n,
                places.iter().cloned().map(RamifiedPlace::new).collect(),
                guard,
            )?;
            let table = BoseckTable::build(&cover)?;
            let gaps = table.gap_sequence(*at)?;
            let symmetric = table.is_symmetric_at(*at)?;
            let genus = table.genus();
            let by_max_gap = (genus > 0).then(|| gaps.max() == Some(2 * genus - 1));
            let upper = cyclic_semigroup_with(&cover, *at, guard)?;
            let boseck_semigroup = match table.semigroup_from_gaps(*at) {
                Ok(sg) => json!(sg.generators()),
                Err(e) => {
                    warnings.push(format!("gap sequence does not close to a semigroup: {e}"));
                    Value::Null
                }
            };
            let max_gap = match table.max_gap_one_place() {
                Ok(g) => Some(g),
                Err(Error::GenusZero) => {
                    warnings.push("genus 0: no largest gap".to_string());
                    None
                }
                Err(Error::MultiplePlaces(_)) => None,
                Err(e) => return Err(e),
            };
            if upper.exactness == crate::covers::Exactness::UpperBound {
                warnings.push(
                    "several ramified places: generator semigroup is an UPPER-BOUND".to_string(),
                );
            }
            let per_place = (0..table.place_count())
                .map(|i| table.is_symmetric_at(i))
                .collect::<Result<Vec<_>>>()?;
            json!({
                "degree": table.degree(),
                "place": at,
                "deltas": table.deltas(),
                "gamma": table.gamma(),
                "nu": table.nu(*at)?,
                "rho": table.rho(*at)?,
                "genus": genus,
                "gaps": gaps,
                "symmetric": symmetric,
                "symmetric_by_max_gap": by_max_gap,
                "symmetric_per_place": per_place,
                "jumps_congruent_minus_one": table.other_jumps_congruent_minus_one(*at)?,
                "max_gap_one_place": max_gap,
                "boseck_semigroup": boseck_semigroup,
                "generator_semigroup": {
                    "generators": upper.semigroup.generators(),
                    "genus": upper.semigroup.genus(),
                    "exactness": upper.exactness,
                },
            })
        }
        JobSpec::Filtration { poles } => {
            let report = filtration::jumps(poles)?;
            json!({
                "pole_numbers": report.pole_numbers,
                "jump_indices": report.jump_indices,
                "generators": report.generators,
                "jump_count": report.jump_count(),
            })
        }
        JobSpec::Check {
            gens,
            p,
            q,
            nilpotency,
            points,
        } => {
            let semigroup = NumericalSemigroup::from_generators_with(gens, guard)?;
            let report = invariants::check(&CurveCheckInput {
                semigroup,
                p: *p,
                q: *q,
                nilpotency_order: *nilpotency,
                claimed_points: *points,
            })?;
            if report.zero_cartier_classicality == invariants::ClassicalityVerdict::Inconclusive {
                warnings.push("g = p - 1: classicality under zero Cartier operator is open".into());
            }
            let mut value = serde_json::to_value(&report).expect("check report serializes");
            value["consistent"] = Value::Bool(report.consistent());
            value
        }
    };
    Ok(Report {
        spec: spec.clone(),
        result,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_json_shape() {
        let r = run_job(
            &JobSpec::Semigroup { gens: vec![3, 5] },
            SizeGuard::default(),
        )
        .unwrap();
        let v = r.to_json();
        assert_eq!(v["kind"], "semigroup");
        assert_eq!(v["input"], json!({"gens": [3, 5]}));
        assert_eq!(v["result"]["gaps"], json!([1, 2, 4, 7]));
        assert_eq!(v["result"]["genus"], 4);
        assert_eq!(v["result"]["frobenius"], 7);
        assert_eq!(v["result"]["symmetric"], true);
        assert_eq!(v["warnings"], json!([]));
    }

    #[test]
    fn large_integers_become_strings() {
        let mut v = json!({"a": 1u64 << 53, "b": [(1u64 << 53) - 1, u64::MAX], "c": "x"});
        stringify_large_ints(&mut v);
        assert_eq!(v["a"], "9007199254740992");
        assert_eq!(v["b"][0], 9007199254740991u64);
        assert_eq!(v["b"][1], "18446744073709551615");
        restore_large_ints(&mut v);
        assert_eq!(v["a"], 1u64 << 53);
        assert_eq!(v["b"][1], u64::MAX);
        assert_eq!(v["c"], "x");
    }

    #[test]
    fn table_rendering() {
        let spec = JobSpec::Cyclic {
            p: 5,
            n: 1,
            places: vec![vec![3]],
            at: 0,
        };
        let r = run_job(&spec, SizeGuard::default()).unwrap();
        let t = r.to_table();
        assert!(t.contains("gaps: {1, 2, 4, 7}"), "{t}");
        assert!(t.contains("symmetric: yes"), "{t}");
        assert!(t.contains("genus: 4"), "{t}");
        assert!(t.contains("generator_semigroup.exactness: EXACT"), "{t}");
    }

    #[test]
    fn from_json_rejects_garbage() {
        assert!(Report::from_json(&json!([])).is_err());
        assert!(Report::from_json(
            &json!({"kind": "nope", "input": {}, "result": {}, "warnings": []})
        )
        .is_err());
    }
}
