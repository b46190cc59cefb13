use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use wellcov::ClassQuery;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algo {
    Brute,
    Sat,
    Chordal,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Brute => "brute",
            Algo::Sat => "sat",
            Algo::Chordal => "chordal",
        })
    }
}

/// A `--property` value such as `wk:2` or `shedding:0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Property(pub ClassQuery);

fn parameter(name: &str, value: &str, min: usize) -> Result<usize, String> {
    let k: usize = value.parse().map_err(|_| format!("{name} needs a non-negative integer, got {value:?}"))?;
    if k < min {
        return Err(format!("{name} needs a parameter of at least {min}"));
    }
    Ok(k)
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Property, String> {
        let q = match s.split_once(':') {
            None if s == "well-covered" => ClassQuery::WellCovered,
            None if s == "b-graph" => ClassQuery::BGraph,
            Some(("wk", k)) => ClassQuery::Wk(parameter("wk", k, 1)?),
            Some(("extendable", k)) => ClassQuery::KExtendable(parameter("extendable", k, 1)?),
            Some(("es", k)) => ClassQuery::Es(parameter("es", k, 1)?),
            Some(("shedding", v)) => ClassQuery::Shedding(parameter("shedding", v, 0)?),
            _ => {
                return Err(format!(
                    "unknown property {s:?}; expected well-covered, wk:K, extendable:K, es:S, b-graph or shedding:V"
                ))
            }
        };
        Ok(Property(q))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ClassQuery::WellCovered => write!(f, "well-covered"),
            ClassQuery::Wk(k) => write!(f, "wk:{k}"),
            ClassQuery::KExtendable(k) => write!(f, "extendable:{k}"),
            ClassQuery::Es(s) => write!(f, "es:{s}"),
            ClassQuery::BGraph => write!(f, "b-graph"),
            ClassQuery::Shedding(v) => write!(f, "shedding:{v}"),
        }
    }
}

impl Property {
    pub fn supports(&self, algo: Algo) -> bool {
        match algo {
            Algo::Brute => true,
            Algo::Sat => matches!(self.0, ClassQuery::Es(_) | ClassQuery::BGraph),
            Algo::Chordal => matches!(self.0, ClassQuery::WellCovered | ClassQuery::Wk(_) | ClassQuery::BGraph),
        }
    }

    /// The legal algorithms for this property.
    pub fn algorithms(&self) -> Vec<Algo> {
        [Algo::Brute, Algo::Sat, Algo::Chordal].into_iter().filter(|&a| self.supports(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["well-covered", "wk:3", "extendable:1", "es:2", "b-graph", "shedding:0"] {
            assert_eq!(s.parse::<Property>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects() {
        for s in ["wk:0", "es:0", "extendable:0", "wk", "wk:x", "cograph", "shedding:-1", ""] {
            assert!(s.parse::<Property>().is_err(), "{s}");
        }
    }

    #[test]
    fn legal_algorithms() {
        let p: Property = "es:1".parse().unwrap();
        assert_eq!(p.algorithms(), vec![Algo::Brute, Algo::Sat]);
        let p: Property = "b-graph".parse().unwrap();
        assert_eq!(p.algorithms(), vec![Algo::Brute, Algo::Sat, Algo::Chordal]);
        let p: Property = "shedding:2".parse().unwrap();
        assert_eq!(p.algorithms(), vec![Algo::Brute]);
    }
}
