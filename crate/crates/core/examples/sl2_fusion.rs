//! The Andersen quotient for sl2 at l = 5 is the level-3 fusion ring.

use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::cells::{certified_ideal, CellSelector, IdealKind};
use tiltcell::hecke::KlBasis;
use tiltcell::rootdata::RootSystem;
use tiltcell::tilting::{radical, Tilting};

fn main() -> tiltcell::error::Result<()> {
    let g = Arc::new(AffineGroup::new(Arc::new(RootSystem::parse("A1")?), 5)?);
    let t = Tilting::new(Arc::new(KlBasis::new(g)));
    let ideal = certified_ideal(t.kl(), 14, &CellSelector::Identity, IdealKind::Below)?;
    let ring = t.quotient_ring(&ideal)?;
    for i in 0..ring.dim() {
        for j in i..ring.dim() {
            let terms: Vec<String> = ring.table[i][j].iter().map(|(k, c)| format!("{c}[{}]", ring.basis[*k])).collect();
            println!("[{}] [{}] = {}", ring.basis[i], ring.basis[j], terms.join(" + "));
        }
    }
    println!("radical dimension {}", radical(&ring)?.dim);
    Ok(())
}
