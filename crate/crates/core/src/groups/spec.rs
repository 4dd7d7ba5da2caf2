//! Textual group specifications used by the command line.
//!
//! ```text
//! cyclic:N | abelian:d1xd2x... | dihedral:M | dicyclic:M | sym:K | alt:K
//! sdp:A:B:R | prod:<spec>,<spec> | file:<path.json>
//! ```
//!
//! `prod` nests to the left: `prod:prod:cyclic:2,cyclic:2,cyclic:3` is
//! `(C2 x C2) x C3`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{FiniteGroup, GroupFactory, Result, SemidirectSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed group spec `{input}`: {reason}")]
pub struct SpecParseError {
    pub input: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Abelian(Vec<u64>),
    Dihedral(u64),
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Semidirect(SemidirectSpec),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    File(PathBuf),
}

impl GroupSpec {
    pub fn build(&self, factory: &GroupFactory) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => factory.cyclic(*n),
            GroupSpec::Abelian(ds) => factory.abelian(ds),
            GroupSpec::Dihedral(m) => factory.dihedral(*m),
            GroupSpec::Dicyclic(m) => factory.dicyclic(*m),
            GroupSpec::Symmetric(k) => factory.symmetric(*k),
            GroupSpec::Alternating(k) => factory.alternating(*k),
            GroupSpec::Semidirect(spec) => factory.semidirect_cyclic(*spec),
            GroupSpec::Product(a, b) => {
                let a = a.build(factory)?;
                let b = b.build(factory)?;
                factory.direct_product(&a, &b)
            }
            GroupSpec::File(path) => FiniteGroup::load(path, factory),
        }
    }
}

fn parse_num(input: &str, text: &str) -> std::result::Result<u64, SpecParseError> {
    text.trim().parse().map_err(|_| SpecParseError {
        input: input.to_string(),
        reason: format!("`{text}` is not a non-negative integer"),
    })
}

fn parse_prefix<'a>(
    full: &str,
    s: &'a str,
) -> std::result::Result<(GroupSpec, &'a str), SpecParseError> {
    let err = |reason: String| SpecParseError {
        input: full.to_string(),
        reason,
    };
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| err(format!("expected `kind:argument`, found `{s}`")))?;
    if kind == "prod" {
        let (left, rest) = parse_prefix(full, rest)?;
        let rest = rest
            .strip_prefix(',')
            .ok_or_else(|| err("prod needs two comma-separated specs".into()))?;
        let (right, rest) = parse_prefix(full, rest)?;
        return Ok((GroupSpec::Product(Box::new(left), Box::new(right)), rest));
    }
    let (arg, rest) = match rest.find(',') {
        Some(pos) => (&rest[..pos], &rest[pos..]),
        None => (rest, ""),
    };
    if arg.is_empty() {
        return Err(err(format!("missing argument for `{kind}`")));
    }
    let spec = match kind {
        "cyclic" => GroupSpec::Cyclic(parse_num(full, arg)?),
        "abelian" => GroupSpec::Abelian(
            arg.split('x')
                .map(|d| parse_num(full, d))
                .collect::<std::result::Result<_, _>>()?,
        ),
        "dihedral" => GroupSpec::Dihedral(parse_num(full, arg)?),
        "dicyclic" => GroupSpec::Dicyclic(parse_num(full, arg)?),
        "sym" => GroupSpec::Symmetric(parse_num(full, arg)?),
        "alt" => GroupSpec::Alternating(parse_num(full, arg)?),
        "sdp" => {
            let parts: Vec<&str> = arg.split(':').collect();
            if parts.len() != 3 {
                return Err(err("sdp expects A:B:R".into()));
            }
            let spec = SemidirectSpec {
                a: parse_num(full, parts[0])?,
                b: parse_num(full, parts[1])?,
                r: parse_num(full, parts[2])?,
            };
            GroupSpec::Semidirect(spec)
        }
        "file" => GroupSpec::File(PathBuf::from(arg)),
        other => return Err(err(format!("unknown group kind `{other}`"))),
    };
    Ok((spec, rest))
}

impl FromStr for GroupSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (spec, rest) = parse_prefix(s, s.trim())?;
        if !rest.is_empty() {
            return Err(SpecParseError {
                input: s.to_string(),
                reason: format!("trailing input `{rest}`"),
            });
        }
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Abelian(ds) => {
                let parts: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
                write!(f, "abelian:{}", parts.join("x"))
            }
            GroupSpec::Dihedral(m) => write!(f, "dihedral:{m}"),
            GroupSpec::Dicyclic(m) => write!(f, "dicyclic:{m}"),
            GroupSpec::Symmetric(k) => write!(f, "sym:{k}"),
            GroupSpec::Alternating(k) => write!(f, "alt:{k}"),
            GroupSpec::Semidirect(s) => write!(f, "sdp:{}:{}:{}", s.a, s.b, s.r),
            GroupSpec::Product(a, b) => write!(f, "prod:{a},{b}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_every_kind() {
        assert_eq!("cyclic:16".parse(), Ok(GroupSpec::Cyclic(16)));
        assert_eq!("abelian:2x2x4".parse(), Ok(GroupSpec::Abelian(vec![2, 2, 4])));
        assert_eq!("dihedral:4".parse(), Ok(GroupSpec::Dihedral(4)));
        assert_eq!("dicyclic:2".parse(), Ok(GroupSpec::Dicyclic(2)));
        assert_eq!("sym:3".parse(), Ok(GroupSpec::Symmetric(3)));
        assert_eq!("alt:4".parse(), Ok(GroupSpec::Alternating(4)));
        assert_eq!(
            "sdp:7:3:2".parse(),
            Ok(GroupSpec::Semidirect(SemidirectSpec { a: 7, b: 3, r: 2 }))
        );
        assert_eq!(
            "file:/tmp/g.json".parse(),
            Ok(GroupSpec::File(PathBuf::from("/tmp/g.json")))
        );
    }

    #[test]
    fn products_nest_left() {
        let spec: GroupSpec = "prod:prod:cyclic:2,cyclic:2,cyclic:3".parse().unwrap();
        let expected = GroupSpec::Product(
            Box::new(GroupSpec::Product(
                Box::new(GroupSpec::Cyclic(2)),
                Box::new(GroupSpec::Cyclic(2)),
            )),
            Box::new(GroupSpec::Cyclic(3)),
        );
        assert_eq!(spec, expected);
        let g = spec.build(&GroupFactory::default()).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "cyclic", "cyclic:", "cyclic:x", "blob:3", "sdp:3:2", "prod:cyclic:2", "cyclic:2,cyclic:3"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn build_reports_invalid_semidirect() {
        let spec: GroupSpec = "sdp:5:3:2".parse().unwrap();
        assert!(spec.build(&GroupFactory::default()).is_err());
    }

    fn arb_spec() -> impl Strategy<Value = GroupSpec> {
        let leaf = prop_oneof![
            (1u64..50).prop_map(GroupSpec::Cyclic),
            prop::collection::vec(1u64..9, 1..4).prop_map(GroupSpec::Abelian),
            (1u64..20).prop_map(GroupSpec::Dihedral),
            (1u64..6).prop_map(GroupSpec::Symmetric),
            (1u64..20, 1u64..20, 1u64..20)
                .prop_map(|(a, b, r)| GroupSpec::Semidirect(SemidirectSpec { a, b, r })),
        ];
        leaf.prop_recursive(3, 8, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::Product(Box::new(a), Box::new(b)))
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(spec in arb_spec()) {
            let text = spec.to_string();
            prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), spec);
        }
    }
}
