//! The 24-dimensional quotient for G2 at l = 7 and its nilpotent radical.

use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::cells::{certified_ideal, CellSelector, IdealKind};
use tiltcell::hecke::KlBasis;
use tiltcell::rootdata::RootSystem;
use tiltcell::tilting::{radical, Tilting};

fn main() -> tiltcell::error::Result<()> {
    let g = Arc::new(AffineGroup::new(Arc::new(RootSystem::parse("G2")?), 7)?);
    let t = Tilting::new(Arc::new(KlBasis::new(g)));
    let ideal = certified_ideal(t.kl(), 14, &CellSelector::Subregular, IdealKind::Below)?;
    let ring = t.quotient_ring(&ideal)?;
    let basis: Vec<String> = ring.basis.iter().map(|w| w.to_string()).collect();
    println!("{} survivors: {}", ring.dim(), basis.join(" "));
    let rad = radical(&ring)?;
    println!("trace form rank {}, radical dimension {}", rad.trace_form_rank, rad.dim);
    for (z, p) in rad.basis.iter().zip(&rad.nilpotency_index) {
        let terms: Vec<String> = z
            .iter()
            .enumerate()
            .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
            .map(|(k, c)| format!("{c}[{}]", ring.basis[k]))
            .collect();
        println!("  {}  z^{p} = 0", terms.join(" + "));
    }
    Ok(())
}
