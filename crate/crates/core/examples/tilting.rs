//! Tilting characters for G2 at l = 7, regular and singular.

use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::hecke::KlBasis;
use tiltcell::rootdata::{RootSystem, Weight};
use tiltcell::tilting::Tilting;

fn main() -> tiltcell::error::Result<()> {
    let g = Arc::new(AffineGroup::new(Arc::new(RootSystem::parse("G2")?), 7)?);
    let t = Tilting::new(Arc::new(KlBasis::new(g)));
    for mu in ["1,0", "4,1", "7,0", "3,2", "5,0"] {
        let mu: Weight = mu.parse()?;
        let q = t.tilting_indecomposable(&mu)?;
        let parts: Vec<String> = q.sorted_factors(t.group().root_system()).iter().map(|(nu, m)| format!("{m} V{nu}")).collect();
        println!("Q{mu} in block {}: {}  (dim {})", q.block, parts.join(" + "), t.dimension(&q)?);
    }
    let a: Weight = "1,0".parse()?;
    let b: Weight = "3,0".parse()?;
    println!("Q{a} (x) Q{b} = {:?}", t.decompose_tensor(&a, &b)?);
    Ok(())
}
