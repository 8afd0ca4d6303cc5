//! Every design the constructions can produce for a given length.

use crate::constructions::field::prime_power;
use crate::constructions::hadamard::{hadamard_design, paley_hadamard, sylvester_hadamard, HadamardMatrix};
use crate::constructions::symmetric::{
    complement_design, from_symmetric_complemented, from_symmetric_residual, grid_design,
    hadamard_symmetric_design, paley_design, projective_plane, SymmetricDesign,
};
use crate::design::{complement, shells_of, WeightedDesign};
use crate::feasibility::{candidate_row, ParameterRow};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub design: WeightedDesign,
}

/// A Hadamard matrix of the given order from the Sylvester or Paley families.
pub fn hadamard_of_order(order: usize) -> Option<HadamardMatrix> {
    if order.is_power_of_two() {
        return Some(sylvester_hadamard(order.trailing_zeros()));
    }
    let q = order.checked_sub(1)?;
    (q % 4 == 3 && prime_power(q).is_some()).then(|| paley_hadamard(q as u64).ok()).flatten()
}

/// Generated symmetric designs on `v` points, with their complements.
pub fn symmetric_designs(v: usize) -> Vec<(String, SymmetricDesign)> {
    let mut base: Vec<(String, SymmetricDesign)> = Vec::new();
    for q in 2..=v {
        if q * q + q + 1 == v {
            if let Ok(d) = projective_plane(q as u64) {
                base.push((format!("projective plane of order {q}"), d));
            }
        }
    }
    if let Ok(d) = paley_design(v as u64) {
        base.push((format!("quadratic residues mod {v}"), d));
    }
    if let Some(h) = hadamard_of_order(v + 1) {
        if let Ok(d) = hadamard_symmetric_design(&h) {
            base.push((format!("Hadamard matrix of order {}", v + 1), d));
        }
    }
    if v == 16 {
        base.push(("4x4 grid".to_string(), grid_design()));
    }
    let mut out = Vec::new();
    for (name, d) in base {
        if let Ok(c) = complement_design(&d) {
            out.push((format!("complement of {name}"), c));
        }
        out.push((name, d));
    }
    out
}

/// All constructed two-shell designs in H(n, 2), including point complements.
pub fn catalog(n: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    if n % 2 == 0 && n / 2 % 4 == 3 {
        if let Some(h) = hadamard_of_order(n / 2 + 1) {
            if let Ok(d) = hadamard_design(&h) {
                out.push(CatalogEntry { name: format!("Hadamard matrix of order {}", n / 2 + 1), design: d });
            }
        }
    }
    for (name, sym) in symmetric_designs(n + 1) {
        if let Ok(d) = from_symmetric_residual(&sym, 0) {
            out.push(CatalogEntry { name: format!("residual of {name}"), design: d });
        }
        if let Ok(d) = from_symmetric_complemented(&sym, 0) {
            out.push(CatalogEntry { name: format!("complemented residual of {name}"), design: d });
        }
    }
    let flipped: Vec<CatalogEntry> = out
        .iter()
        .map(|e| CatalogEntry { name: format!("point complement of {}", e.name), design: complement(&e.design) })
        .collect();
    out.extend(flipped);
    out
}

/// The parameter row a two-shell design with constant shell weights realises.
pub fn design_row(d: &WeightedDesign) -> Option<ParameterRow> {
    let shells = shells_of(d);
    if shells.len() != 2 {
        return None;
    }
    let (a, b) = (&shells.shells[0], &shells.shells[1]);
    let w = b.constant_weight.clone()? / a.constant_weight.clone()?;
    let row = candidate_row(d.n(), a.r, b.r, a.count)?;
    (row.n2 == b.count && row.w == w).then_some(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_orders_available() {
        for order in [1, 2, 4, 8, 12, 16, 20, 24, 28, 32] {
            assert_eq!(hadamard_of_order(order).map(|h| h.order()), Some(order));
        }
        assert!(hadamard_of_order(36).is_none());
    }

    #[test]
    fn small_catalog_matches_both_rows() {
        let rows: Vec<ParameterRow> = catalog(6).iter().filter_map(|e| design_row(&e.design)).collect();
        assert!(rows.contains(&candidate_row(6, 2, 3, 3).unwrap()));
        assert!(rows.contains(&candidate_row(6, 3, 4, 4).unwrap()));
    }
}
