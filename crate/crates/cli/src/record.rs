use std::time::Instant;

use fibform_core::{fib, represent_detailed, verify_representation, FormCase, Representation};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// One line of the scan cache, and the structured form of `represent`.
/// Big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub p: u64,
    pub p_mod4: u8,
    pub case_tag: String,
    pub fp: String,
    pub u: String,
    pub v: String,
    pub identity_ok: bool,
    /// `(w, x, y, z)` as `"n/4"` strings; absent for p = 3, 5.
    #[serde(default)]
    pub gamma_coords: Option<[String; 4]>,
    pub elapsed_ms: f64,
}

impl ResultRecord {
    pub fn build(p: u64) -> Result<ResultRecord, CliError> {
        let start = Instant::now();
        let construction = represent_detailed(p)?;
        let rep = &construction.representation;
        let gamma_coords = match &construction.coordinates {
            Some(k) => {
                let quarters: Option<Vec<String>> = k
                    .as_array()
                    .iter()
                    .map(|d| d.over_power_of_two(2))
                    .collect();
                let quarters = quarters.ok_or_else(|| {
                    CliError::Verification(format!("coordinates {k} exceed denominator 4"))
                })?;
                Some(quarters.try_into().expect("four coordinates"))
            }
            None => None,
        };
        let mut record = ResultRecord {
            schema_version: SCHEMA_VERSION,
            p,
            p_mod4: (p % 4) as u8,
            case_tag: rep.case.to_string(),
            fp: fib(p).to_string(),
            u: rep.u.to_string(),
            v: rep.v.to_string(),
            identity_ok: false,
            gamma_coords,
            elapsed_ms: 0.0,
        };
        record.identity_ok = record.recheck();
        record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(record)
    }

    /// Re-derives the identity from the serialized fields alone.
    pub fn recheck(&self) -> bool {
        let parse = |s: &str| s.parse::<BigInt>().ok();
        let (Some(fp), Some(u), Some(v)) = (parse(&self.fp), parse(&self.u), parse(&self.v)) else {
            return false;
        };
        let Ok(case) = self.case_tag.parse::<FormCase>() else {
            return false;
        };
        if fp != fib(self.p) || case != FormCase::for_prime(self.p) {
            return false;
        }
        verify_representation(&Representation::new(self.p, case, u, v))
    }

    /// Copy with timing zeroed, for comparisons that must ignore it.
    pub fn without_timing(&self) -> ResultRecord {
        ResultRecord {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_for_seven() {
        let r = ResultRecord::build(7).unwrap();
        assert_eq!((r.u.as_str(), r.v.as_str()), ("3", "1"));
        assert_eq!(r.case_tag, "CaseII");
        assert_eq!(r.p_mod4, 3);
        assert_eq!(r.fp, "13");
        assert!(r.identity_ok);
        let coords = r.gamma_coords.unwrap();
        assert_eq!(coords, ["0/4", "6/4", "2/4", "0/4"].map(String::from));
    }

    #[test]
    fn special_primes_have_no_coordinates() {
        let r = ResultRecord::build(5).unwrap();
        assert_eq!(
            (r.u.as_str(), r.v.as_str(), r.case_tag.as_str()),
            ("5", "1", "CaseI")
        );
        assert!(r.gamma_coords.is_none());
        assert!(r.identity_ok);
    }

    #[test]
    fn recheck_catches_tampering() {
        let good = ResultRecord::build(13).unwrap();
        assert!(good.recheck());
        let mut bad = good.clone();
        bad.v = "9".into();
        assert!(!bad.recheck());
        let mut bad = good.clone();
        bad.fp = "234".into();
        assert!(!bad.recheck());
        let mut bad = good.clone();
        bad.case_tag = "CaseII".into();
        assert!(!bad.recheck());
        let mut bad = good;
        bad.u = "forty-two".into();
        assert!(!bad.recheck());
    }

    #[test]
    fn unknown_fields_are_ignored() {
        let line = r#"{"schema_version":1,"p":7,"p_mod4":3,"case_tag":"CaseII","fp":"13","u":"3","v":"1","identity_ok":true,"elapsed_ms":0.5,"host":"x"}"#;
        let r: ResultRecord = serde_json::from_str(line).unwrap();
        assert!(r.gamma_coords.is_none());
        assert!(r.recheck());
    }

    #[test]
    fn json_round_trip_preserves_big_values() {
        let r = ResultRecord::build(199).unwrap();
        let back: ResultRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        assert!(back.recheck());
    }
}
