use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CanonicalCode;

/// An exceptional family member with its parameters. Inner graphs of the
/// join families are stored by canonical code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    /// Two complete digraphs on `n + 1` and `m + 1` vertices sharing one vertex.
    D1 { n: usize, m: usize },
    /// `n + 1` independent vertices joined both ways to an `n`-vertex digraph.
    D2 { n: usize, inner: CanonicalCode },
    /// Four base vertices and a complete core of order `n`; the flags add the
    /// arcs between the two core-joined base vertices.
    D3 { n: usize, forward: bool, backward: bool },
    D4,
    G1 { n: usize, m: usize },
    G2 { n: usize, inner: CanonicalCode },
    /// The flags add the edges `w0 b1` and `w1 b0`.
    G3 { n: usize, opt0: bool, opt1: bool },
    G4,
    /// `D1` with equal sides.
    D1Prime { n: usize },
    /// `D3` with a single core vertex.
    D3Prime { forward: bool, backward: bool },
    G5 { n: usize, m: usize },
    G6 { n: usize, inner: CanonicalCode },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TagDomain {
    Directed,
    Bipartite,
    Undirected,
}

impl FamilyTag {
    pub fn domain(&self) -> TagDomain {
        use FamilyTag::*;
        match self {
            D1 { .. } | D2 { .. } | D3 { .. } | D4 | D1Prime { .. } | D3Prime { .. } => TagDomain::Directed,
            G1 { .. } | G2 { .. } | G3 { .. } | G4 => TagDomain::Bipartite,
            G5 { .. } | G6 { .. } => TagDomain::Undirected,
        }
    }

    /// Family name without parameters, e.g. `"D3'"`.
    pub fn kind(&self) -> &'static str {
        use FamilyTag::*;
        match self {
            D1 { .. } => "D1",
            D2 { .. } => "D2",
            D3 { .. } => "D3",
            D4 => "D4",
            G1 { .. } => "G1",
            G2 { .. } => "G2",
            G3 { .. } => "G3",
            G4 => "G4",
            D1Prime { .. } => "D1'",
            D3Prime { .. } => "D3'",
            G5 { .. } => "G5",
            G6 { .. } => "G6",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyTag::*;
        let k = self.kind();
        match self {
            D1 { n, m } | G1 { n, m } | G5 { n, m } => write!(f, "{k}({n},{m})"),
            D2 { n, inner } | G2 { n, inner } | G6 { n, inner } => write!(f, "{k}({n},{inner})"),
            D3 { n, forward, backward } => write!(f, "{k}({n},{forward},{backward})"),
            G3 { n, opt0, opt1 } => write!(f, "{k}({n},{opt0},{opt1})"),
            D1Prime { n } => write!(f, "{k}({n})"),
            D3Prime { forward, backward } => write!(f, "{k}({forward},{backward})"),
            D4 | G4 => f.write_str(k),
        }
    }
}

fn bad(s: &str) -> Error {
    Error::Domain(format!("unrecognized family tag `{s}`"))
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "D4" {
            return Ok(FamilyTag::D4);
        }
        if s == "G4" {
            return Ok(FamilyTag::G4);
        }
        let (kind, rest) = s.split_once('(').ok_or_else(|| bad(s))?;
        let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(|| bad(s))?.split(',').map(str::trim).collect();
        let num = |i: usize| -> Result<usize> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| bad(s)) };
        let flag = |i: usize| -> Result<bool> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| bad(s)) };
        let code = |i: usize| -> Result<CanonicalCode> { CanonicalCode::from_hex(args.get(i).ok_or_else(|| bad(s))?) };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad(s)) };
        let tag = match kind {
            "D1" | "G1" | "G5" => {
                arity(2)?;
                let (n, m) = (num(0)?, num(1)?);
                match kind {
                    "D1" => FamilyTag::D1 { n, m },
                    "G1" => FamilyTag::G1 { n, m },
                    _ => FamilyTag::G5 { n, m },
                }
            }
            "D2" | "G2" | "G6" => {
                arity(2)?;
                let (n, inner) = (num(0)?, code(1)?);
                match kind {
                    "D2" => FamilyTag::D2 { n, inner },
                    "G2" => FamilyTag::G2 { n, inner },
                    _ => FamilyTag::G6 { n, inner },
                }
            }
            "D3" => {
                arity(3)?;
                FamilyTag::D3 {
                    n: num(0)?,
                    forward: flag(1)?,
                    backward: flag(2)?,
                }
            }
            "G3" => {
                arity(3)?;
                FamilyTag::G3 {
                    n: num(0)?,
                    opt0: flag(1)?,
                    opt1: flag(2)?,
                }
            }
            "D1'" => {
                arity(1)?;
                FamilyTag::D1Prime { n: num(0)? }
            }
            "D3'" => {
                arity(2)?;
                FamilyTag::D3Prime {
                    forward: flag(0)?,
                    backward: flag(1)?,
                }
            }
            _ => return Err(bad(s)),
        };
        Ok(tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        let inner = CanonicalCode::from_hex("4401").unwrap();
        let tags = [
            FamilyTag::D1 { n: 1, m: 1 },
            FamilyTag::D2 { n: 1, inner: inner.clone() },
            FamilyTag::D3 { n: 2, forward: true, backward: false },
            FamilyTag::D4,
            FamilyTag::G3 { n: 1, opt0: false, opt1: true },
            FamilyTag::G4,
            FamilyTag::D1Prime { n: 2 },
            FamilyTag::D3Prime { forward: false, backward: false },
            FamilyTag::G6 { n: 1, inner },
        ];
        for t in tags {
            assert_eq!(t.to_string().parse::<FamilyTag>().unwrap(), t);
        }
        assert_eq!(FamilyTag::D1 { n: 1, m: 1 }.to_string(), "D1(1,1)");
        assert!("D1(1)".parse::<FamilyTag>().is_err());
        assert!("X9".parse::<FamilyTag>().is_err());
    }
}
