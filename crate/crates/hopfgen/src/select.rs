//! Group specifications such as `sym:4` and the family selectors of the
//! command line.

use std::path::PathBuf;

use clap::Args;

use hopfgen_core::group::{alternating, cyclic, dihedral, direct_product, quaternion, symmetric, Character, FiniteGroup};
use hopfgen_core::hopf::{e_algebra, group_algebra, monomial_type_i, taft};
use hopfgen_core::lattice::DEFAULT_GROUP_CAP;
use hopfgen_core::{make_field, HopfAlgebra};

use crate::{formats, CliError};

/// Environment variable overriding the largest accepted group order.
pub const GROUP_CAP_VAR: &str = "HOPFGEN_MAX_GROUP_ORDER";

pub fn group_cap() -> Result<usize, CliError> {
    match std::env::var(GROUP_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{GROUP_CAP_VAR} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_GROUP_CAP),
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX)
}

/// Parses `cyclic:6`, `sym:4`, `alt:4`, `dihedral:4`, `quaternion`,
/// `product:cyclic:2,cyclic:2` or a path to a group JSON file.
pub fn parse_group(spec: &str, cap: usize) -> Result<FiniteGroup, CliError> {
    let spec = spec.trim();
    let usage = || CliError::Usage(format!("unrecognized group `{spec}`"));
    let too_large = |order: usize| CliError::Core(hopfgen_core::Error::GroupTooLarge { order, cap });
    if spec.ends_with(".json") {
        let text = std::fs::read_to_string(spec).map_err(|e| CliError::Io(format!("{spec}: {e}")))?;
        let v = serde_json::from_str(&text).map_err(|e| CliError::Format(e.to_string()))?;
        let g = formats::group_from_json(&v)?;
        return if g.order() > cap { Err(too_large(g.order())) } else { Ok(g) };
    }
    if spec == "quaternion" {
        return if cap < 8 { Err(too_large(8)) } else { Ok(quaternion()) };
    }
    if spec == "trivial" {
        return Ok(cyclic(1));
    }
    let (kind, arg) = spec.split_once(':').ok_or_else(usage)?;
    if kind == "product" {
        let (a, b) = arg.split_once(',').ok_or_else(usage)?;
        let (a, b) = (parse_group(a, cap)?, parse_group(b, cap)?);
        let order = a.order() * b.order();
        return if order > cap { Err(too_large(order)) } else { Ok(direct_product(&a, &b)) };
    }
    let n: usize = arg.parse().map_err(|_| usage())?;
    let order = match kind {
        "cyclic" => n,
        "sym" => factorial(n),
        "alt" => factorial(n) / 2,
        "dihedral" => n.saturating_mul(2),
        _ => return Err(usage()),
    };
    if n == 0 || (kind == "alt" && n < 2) {
        return Err(usage());
    }
    if order > cap {
        return Err(too_large(order));
    }
    Ok(match kind {
        "cyclic" => cyclic(n),
        "sym" => symmetric(n),
        "alt" => alternating(n),
        _ => dihedral(n),
    })
}

/// The algebra a command works on.
#[derive(Args, Clone, Debug, Default)]
pub struct FamilyArgs {
    /// taft, e, monomial, group or generic; `taft:3`, `e:2` and
    /// `group:sym:3` are accepted as shorthands.
    #[arg(long)]
    pub family: Option<String>,
    /// Parameter of the Taft or E(n) family.
    #[arg(long)]
    pub n: Option<u32>,
    /// Group specification for the group and monomial families.
    #[arg(long)]
    pub group: Option<String>,
    /// Label of the central element `x` of a monomial datum.
    #[arg(long)]
    pub x: Option<String>,
    /// Exponents `k` with `χ(g) = q^k`, one per group element, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<String>,
    /// `n` for the scalar field `Q(ζ_n)` of a group algebra.
    #[arg(long, default_value_t = 1)]
    pub field: u32,
    /// Structure constants in the JSON form written by `describe`.
    #[arg(long)]
    pub hopf: Option<PathBuf>,
}

impl FamilyArgs {
    pub fn build(&self) -> Result<HopfAlgebra, CliError> {
        if let Some(path) = &self.hopf {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let v = serde_json::from_str(&text).map_err(|e| CliError::Format(e.to_string()))?;
            return formats::hopf_from_json(&v);
        }
        let family = self.family.as_deref().ok_or_else(|| CliError::Usage("--family or --hopf is required".into()))?;
        let (name, inline) = match family.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (family, None),
        };
        let n = || -> Result<u32, CliError> {
            match (inline, self.n) {
                (Some(s), _) => s.parse().map_err(|_| CliError::Usage(format!("bad family parameter `{s}`"))),
                (None, Some(n)) => Ok(n),
                (None, None) => Err(CliError::Usage(format!("--n is required for the {name} family"))),
            }
        };
        let cap = group_cap()?;
        let group = || -> Result<FiniteGroup, CliError> {
            let spec = inline.or(self.group.as_deref()).ok_or_else(|| CliError::Usage("--group is required".into()))?;
            parse_group(spec, cap)
        };
        match name {
            "taft" => Ok(taft(n()?)?),
            "e" => Ok(e_algebra(n()?)?),
            "group" => Ok(group_algebra(&group()?, &make_field(self.field)?)?),
            "monomial" => {
                let g = group()?;
                let xl = self.x.as_deref().ok_or_else(|| CliError::Usage("--x is required for the monomial family".into()))?;
                let x = g.index_of(xl).ok_or_else(|| CliError::Core(hopfgen_core::Error::UnknownLabel(xl.into())))?;
                let chi = self.chi.as_deref().ok_or_else(|| CliError::Usage("--chi is required for the monomial family".into()))?;
                let exps = chi
                    .split(',')
                    .map(|s| s.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad exponent `{s}` in --chi"))))
                    .collect::<Result<Vec<_>, _>>()?;
                if exps.len() != g.order() {
                    return Err(CliError::Usage(format!("--chi needs {} exponents", g.order())));
                }
                let f = make_field(g.element_order(x) as u32)?;
                Ok(monomial_type_i(&g, x, &Character::from_exponents(&f, &exps), &f)?)
            }
            "generic" => Err(CliError::Usage("the generic family needs --hopf".into())),
            other => Err(CliError::Usage(format!("unknown family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("sym:4", 24).unwrap().order(), 24);
        assert_eq!(parse_group("product:cyclic:2,cyclic:3", 24).unwrap().order(), 6);
        assert_eq!(parse_group("dihedral:4", 24).unwrap().order(), 8);
        assert!(matches!(parse_group("sym:5", 24), Err(CliError::Core(_))));
        assert!(matches!(parse_group("cube:3", 24), Err(CliError::Usage(_))));
    }

    #[test]
    fn shorthand_families() {
        let a = FamilyArgs { family: Some("taft:3".into()), ..Default::default() };
        assert_eq!(a.build().unwrap().dim(), 9);
        let b = FamilyArgs { family: Some("group:sym:3".into()), field: 1, ..Default::default() };
        assert_eq!(b.build().unwrap().dim(), 6);
        let m = FamilyArgs {
            family: Some("monomial".into()),
            group: Some("product:cyclic:2,cyclic:2".into()),
            x: Some("(a,e)".into()),
            chi: Some("0,0,1,1".into()),
            ..Default::default()
        };
        assert_eq!(m.build().unwrap().dim(), 8);
    }
}
