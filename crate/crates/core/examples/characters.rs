//! Weight multiplicities and tensor products of Weyl modules.

use std::sync::Arc;

use tiltcell::characters::Characters;
use tiltcell::rootdata::{RootSystem, Weight};

fn main() -> tiltcell::error::Result<()> {
    let chars = Characters::new(Arc::new(RootSystem::parse("G2")?));
    let adjoint: Weight = "0,1".parse()?;
    println!("dim V(0,1) = {}", chars.weyl_dim(&adjoint)?);
    for (mu, m) in chars.dominant_multiplicities(&adjoint)? {
        println!("  dominant weight {mu} with multiplicity {m}");
    }
    let seven: Weight = "1,0".parse()?;
    println!("V(1,0) (x) V(1,0):");
    for (nu, m) in chars.tensor_weyl_factors(&seven, &seven)? {
        println!("  {m} x V{nu}  dim {}", chars.weyl_dim(&nu)?);
    }
    Ok(())
}
