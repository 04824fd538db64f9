//! The invariant suite run by `cayley verify --level N`.

use cayley_core::blocks::verify_blocks;
use cayley_core::fano::{fano_orientation, permutation_orbit};
use cayley_core::gate::{axiom_check_seeded, elimination_report, DEFAULT_S_MAX};
use cayley_core::product::candidates;
use cayley_core::triples::{all_triples, triples_from_twist};
use cayley_core::twist::{basis_product, twist};
use cayley_core::{tree, xor_index, Error, ProductSpec, Sign, SignedIndex, TwistId};
use rayon::prelude::*;

use crate::par::{doubling_table_par, twist_table_par};

pub const MAX_VERIFY_LEVEL: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn render(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            let status = if c.passed { "ok  " } else { "FAIL" };
            format!("{status} {:<22} {}\n", c.name, c.detail)
        })
        .collect()
}

/// Runs every check at level `n` (1 to [`MAX_VERIFY_LEVEL`]). Checks whose
/// cost grows too fast use a smaller level, noted in their detail line.
pub fn run(n: u32) -> Result<Vec<Check>, Error> {
    if n == 0 || n > MAX_VERIFY_LEVEL {
        return Err(Error::LevelTooLarge {
            level: n,
            max: MAX_VERIFY_LEVEL,
        });
    }
    let mut out = Vec::new();

    let spot = twist(TwistId::OMEGA2, 93, 37) == Sign::Minus
        && tree::eval(93, 37) == Sign::Minus
        && basis_product(TwistId::OMEGA2, 93, 37) == SignedIndex::new(Sign::Minus, 120)
        && xor_index(27, 14) == 21;
    out.push(Check::new("spot-values", spot, "e93 e37 = -e120, 27 xor 14 = 21"));

    let axiom_level = n.min(3);
    let failing: Vec<String> = candidates()
        .par_iter()
        .map(|&s| (s, axiom_check_seeded(s, axiom_level, 0x5eed)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|(_, r)| !matches!(r, Ok(r) if r.passed()))
        .map(|(s, _)| s.to_string())
        .collect();
    out.push(Check::new(
        "axioms",
        failing.is_empty(),
        format!("32 candidates, levels 0..={axiom_level}; failing: {failing:?}"),
    ));

    let gate_level = n.clamp(3, 5);
    let report = elimination_report(DEFAULT_S_MAX, gate_level)?;
    out.push(Check::new(
        "elimination",
        report.screen_survivors().len() == 16 && report.survivors_are_the_valid_eight(),
        format!(
            "32 -> {} -> {} at level {gate_level}",
            report.screen_survivors().len(),
            report.final_survivors().len()
        ),
    ));

    let mut engines_ok = true;
    let mut blocks_ok = true;
    let mut nesting_ok = true;
    for id in TwistId::ALL {
        let table = twist_table_par(id, n)?;
        engines_ok &= doubling_table_par(id.spec(), n)? == table;
        blocks_ok &= verify_blocks(id, n).passed();
        for k in 0..n {
            nesting_ok &= table.quadrant(k) == twist_table_par(id, k)?;
        }
    }
    out.push(Check::new("doubling-vs-twist", engines_ok, format!("8 tables at level {n}")));
    out.push(Check::new("block-patterns", blocks_ok, format!("8 tables at level {n}")));
    out.push(Check::new("self-similarity", nesting_ok, format!("levels 0..{n} nest")));

    let triple_level = n.min(6);
    let mut triples_ok = true;
    for id in TwistId::ALL {
        triples_ok &= all_triples(id, triple_level)? == triples_from_twist(id, triple_level)?;
    }
    out.push(Check::new("triples", triples_ok, format!("rules = brute force at level {triple_level}")));

    let size = 1usize << n;
    let tree_ok = (0..size)
        .into_par_iter()
        .all(|p| (0..size).all(|q| tree::eval(p, q) == twist(TwistId::OMEGA2, p, q)));
    out.push(Check::new("twist-tree", tree_ok, format!("p, q < {size}")));

    let arrows = ["↓ ↺ →", "↓ ↺ ←", "↓ ↻ →", "↓ ↻ ←", "↑ ↻ ←", "↑ ↻ →", "↑ ↺ ←", "↑ ↺ →"];
    let mut fano_ok = true;
    for (spec, want) in ProductSpec::VALID.iter().zip(arrows) {
        fano_ok &= fano_orientation(*spec)?.to_string() == want;
    }
    fano_ok &= permutation_orbit(ProductSpec::P0)?.passed() && permutation_orbit(ProductSpec::P3)?.passed();
    out.push(Check::new("fano", fano_ok, "orientations and P0/P3 orbits"));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_level_4() {
        let checks = run(4).unwrap();
        assert!(all_passed(&checks), "{}", render(&checks));
        assert_eq!(checks.len(), 9);
        assert!(run(0).is_err());
        assert!(run(MAX_VERIFY_LEVEL + 1).is_err());
    }
}
