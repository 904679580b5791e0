//! Ring descriptors, table files and corpus files.
//!
//! Inline grammar, as accepted by [`RingSpec::parse`]:
//!
//! ```text
//! cyclic:N                  integers mod N
//! ut3:M                     3x3 upper-triangular constant-diagonal matrices over Z/M
//! product:A+B+...           direct product of inline specs
//! quotient:SPEC/g1,g2,...   SPEC modulo the two-sided ideal generated by g1, g2, ...
//! tables:PATH               ring read from a table file
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Ideal, Sidedness};
use crate::limits::{Limits, HARD_MAX_ORDER};
use crate::registry::CheckId;
use crate::ring::{Construction, FiniteRing};

pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingSpec {
    Cyclic {
        n: usize,
    },
    Ut3 {
        m: usize,
    },
    Product {
        factors: Vec<RingSpec>,
    },
    Quotient {
        ring: Box<RingSpec>,
        ideal: Vec<String>,
    },
    Tables {
        path: PathBuf,
    },
}

impl RingSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::CorpusParse(format!("ring spec `{s}` has no kind prefix")))?;
        let number = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::CorpusParse(format!("`{t}` is not a nonnegative integer")))
        };
        let spec = match kind.trim() {
            "cyclic" => RingSpec::Cyclic { n: number(rest)? },
            "ut3" => RingSpec::Ut3 { m: number(rest)? },
            "product" => RingSpec::Product {
                factors: rest
                    .split('+')
                    .map(RingSpec::parse)
                    .collect::<Result<_>>()?,
            },
            "quotient" => {
                let (ring, gens) = rest.rsplit_once('/').ok_or_else(|| {
                    Error::CorpusParse(format!("quotient `{rest}` needs SPEC/generators"))
                })?;
                RingSpec::Quotient {
                    ring: Box::new(RingSpec::parse(ring)?),
                    ideal: split_top_level(gens)
                        .into_iter()
                        .map(|g| g.trim().to_string())
                        .filter(|g| !g.is_empty())
                        .collect(),
                }
            }
            "tables" => RingSpec::Tables {
                path: PathBuf::from(rest.trim()),
            },
            other => return Err(Error::CorpusParse(format!("unknown ring kind `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::Cyclic { n } if *n < 1 => Err(Error::InvalidParameter(
                "cyclic modulus must be at least 1".into(),
            )),
            RingSpec::Ut3 { m } if *m < 2 => Err(Error::InvalidParameter(
                "ut3 modulus must be at least 2".into(),
            )),
            RingSpec::Product { factors } if factors.len() < 2 => Err(Error::InvalidParameter(
                "a product needs at least two factors".into(),
            )),
            RingSpec::Product { factors } => factors.iter().try_for_each(RingSpec::validate),
            RingSpec::Quotient { ring, .. } => ring.validate(),
            _ => Ok(()),
        }
    }

    /// Builds the ring; relative table paths are resolved against `base_dir`.
    pub fn build(&self, limits: &Limits, base_dir: Option<&Path>) -> Result<Arc<FiniteRing>> {
        self.validate()?;
        Ok(Arc::new(match self {
            RingSpec::Cyclic { n } => FiniteRing::cyclic_with(*n, limits)?,
            RingSpec::Ut3 { m } => FiniteRing::ut3_with(*m, limits)?,
            RingSpec::Product { factors } => {
                let rings = factors
                    .iter()
                    .map(|f| f.build(limits, base_dir))
                    .collect::<Result<Vec<_>>>()?;
                let refs: Vec<&FiniteRing> = rings.iter().map(|r| &**r).collect();
                FiniteRing::product_with(&refs, limits)?
            }
            RingSpec::Quotient { ring, ideal } => {
                let base = ring.build(limits, base_dir)?;
                let gens = ideal
                    .iter()
                    .map(|g| base.parse_element(g))
                    .collect::<Result<Vec<_>>>()?;
                let i = Ideal::generate(&base, &gens, Sidedness::TwoSided);
                return Ok(FiniteRing::quotient(&i)?.0);
            }
            RingSpec::Tables { path } => {
                let path = match base_dir {
                    Some(dir) if path.is_relative() => dir.join(path),
                    _ => path.clone(),
                };
                read_table_file(&path, limits)?
            }
        }))
    }

    /// Whether this is a plain `cyclic:n` descriptor.
    pub fn is_cyclic(&self) -> bool {
        matches!(self, RingSpec::Cyclic { .. })
    }
}

/// Splits on commas outside parentheses, so `(1,0),(0,2)` gives two generators.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Cyclic { n } => write!(f, "cyclic:{n}"),
            RingSpec::Ut3 { m } => write!(f, "ut3:{m}"),
            RingSpec::Product { factors } => {
                write!(f, "product:")?;
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            RingSpec::Quotient { ring, ideal } => write!(f, "quotient:{ring}/{}", ideal.join(",")),
            RingSpec::Tables { path } => write!(f, "tables:{}", path.display()),
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::parse(s)
    }
}

/// Reads a table file: the order, `order²` addition entries, `order²`
/// multiplication entries, then the zero and one indices, all whitespace
/// separated.
pub fn read_table_file(path: &Path, limits: &Limits) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path)?;
    parse_tables(&text, limits)
}

pub fn parse_tables(text: &str, limits: &Limits) -> Result<FiniteRing> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::CorpusParse(format!("table entry `{t}` is not an index")))
    });
    let mut next = || {
        tokens
            .next()
            .unwrap_or_else(|| Err(Error::CorpusParse("table file ends early".into())))
    };
    let order = next()?;
    if order == 0 {
        return Err(Error::InvalidParameter(
            "ring order must be at least 1".into(),
        ));
    }
    limits.check_order(order)?;
    let add = (0..order * order)
        .map(|_| next())
        .collect::<Result<Vec<_>>>()?;
    let mul = (0..order * order)
        .map(|_| next())
        .collect::<Result<Vec<_>>>()?;
    let zero = next()?;
    let one = next()?;
    if tokens.next().is_some() {
        return Err(Error::CorpusParse(
            "trailing entries after the identity indices".into(),
        ));
    }
    FiniteRing::from_tables_with(
        order,
        &add,
        &mul,
        zero,
        one,
        None,
        Construction::Tables,
        limits,
    )
}

/// Writes `ring` in the table-file format.
pub fn format_tables(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut out = format!("{n}\n");
    for table in [
        ring.add_table().collect::<Vec<_>>(),
        ring.mul_table().collect(),
    ] {
        for row in table.chunks(n) {
            let row: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out.push_str(&format!("{} {}\n", ring.zero(), ring.one()));
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusFile {
    pub rings: Vec<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Limits>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckId>>,
}

impl CorpusFile {
    /// Accepts either a corpus object or a bare array of ring specs.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Either {
            Full(CorpusFile),
            Bare(Vec<RingSpec>),
        }
        let corpus = match serde_json::from_str::<Either>(text) {
            Ok(Either::Full(c)) => c,
            Ok(Either::Bare(rings)) => CorpusFile {
                rings,
                ..Default::default()
            },
            Err(e) => return Err(Error::CorpusParse(e.to_string())),
        };
        for spec in &corpus.rings {
            spec.validate()
                .map_err(|e| Error::CorpusParse(format!("{spec}: {e}")))?;
        }
        if let Some(caps) = &corpus.caps {
            if caps.max_order > HARD_MAX_ORDER || caps.max_order == 0 {
                return Err(Error::CorpusParse(format!(
                    "max_order must lie in 1..={HARD_MAX_ORDER}"
                )));
            }
        }
        Ok(corpus)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn default_corpus() -> Self {
        Self::from_json(DEFAULT_CORPUS).expect("bundled corpus parses")
    }

    /// `caps` overrides applied to `base`.
    pub fn limits(&self, base: &Limits) -> Limits {
        self.caps.unwrap_or(*base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_round_trip() {
        for s in [
            "cyclic:12",
            "ut3:2",
            "product:cyclic:2+cyclic:4",
            "quotient:cyclic:12/4",
            "quotient:ut3:2/E12,E23",
            "quotient:product:cyclic:2+cyclic:4/(1,0),(0,2)",
            "tables:ring.tbl",
        ] {
            let spec = RingSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            let json = serde_json::to_string(&spec).unwrap();
            assert_eq!(serde_json::from_str::<RingSpec>(&json).unwrap(), spec);
        }
        assert_eq!(
            serde_json::to_string(&RingSpec::parse("cyclic:12").unwrap()).unwrap(),
            r#"{"kind":"cyclic","n":12}"#
        );
    }

    #[test]
    fn invalid_specs() {
        for s in [
            "cyclic:0",
            "ut3:1",
            "product:cyclic:2",
            "circle:3",
            "cyclic:x",
            "cyclic",
        ] {
            assert!(RingSpec::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn builds() {
        let lim = Limits::default();
        let p = RingSpec::parse("product:cyclic:2+cyclic:4")
            .unwrap()
            .build(&lim, None)
            .unwrap();
        assert_eq!(p.order(), 8);
        let q = RingSpec::parse("quotient:cyclic:12/4")
            .unwrap()
            .build(&lim, None)
            .unwrap();
        assert_eq!(q.order(), 4);
        let big = RingSpec::parse("cyclic:5000").unwrap().build(&lim, None);
        assert!(big.unwrap_err().is_cap());
    }

    #[test]
    fn table_format_round_trip() {
        let r = FiniteRing::ut3(2).unwrap();
        let back = parse_tables(&format_tables(&r), &Limits::default()).unwrap();
        assert!(back.add_table().eq(r.add_table()));
        assert!(back.mul_table().eq(r.mul_table()));
        assert!(parse_tables("2 0 1 1 0", &Limits::default()).is_err());
    }

    #[test]
    fn corpus_forms() {
        let bare = CorpusFile::from_json(r#"[{"kind":"cyclic","n":6}]"#).unwrap();
        assert_eq!(bare.rings, vec![RingSpec::Cyclic { n: 6 }]);
        let full = CorpusFile::from_json(
            r#"{"rings":[{"kind":"ut3","m":2}],"caps":{"max_order":100},"checks":["R220"]}"#,
        )
        .unwrap();
        assert_eq!(full.caps.unwrap().max_order, 100);
        assert_eq!(
            full.caps.unwrap().hom_max_rank,
            Limits::default().hom_max_rank
        );
        assert_eq!(full.checks.unwrap(), vec![CheckId::R220]);
        assert!(CorpusFile::from_json(r#"{"rings":[{"kind":"cyclic","n":0}]}"#).is_err());
        assert!(CorpusFile::from_json("nope").is_err());
        let default = CorpusFile::default_corpus();
        assert!(default.rings.contains(&RingSpec::Ut3 { m: 3 }));
    }
}
