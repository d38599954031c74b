//! Root data for a few types, with the G2 Cartan convention spelled out.

use tiltcell::rootdata::RootSystem;

fn main() -> tiltcell::error::Result<()> {
    for t in ["A2", "B2", "G2", "B3", "D4"] {
        let rs = RootSystem::parse(t)?;
        println!(
            "{t}: rank {}, |W| = {}, h = {}, {} positive roots, rho = {}",
            rs.rank(),
            rs.weyl().order(),
            rs.coxeter_number(),
            rs.positive_roots().len(),
            rs.rho()
        );
    }
    let g2 = RootSystem::parse("G2")?;
    println!("G2 Cartan matrix {:?}, squared lengths {:?}", g2.datum().matrix(), g2.norms());
    for (beta, coroot) in g2.positive_roots().iter().zip(g2.coroots()) {
        println!("  root {beta:?}  coroot {coroot:?}");
    }
    Ok(())
}
