use embdist::graph::named;
use embdist::graph::oracle::DEFAULT_BUDGET;
use embdist::groupring::{face_element, genus_poly_from_face_element, Mode};

fn main() -> embdist::Result<()> {
    let g = named::dipole(3)?;
    for mode in [Mode::Genus, Mode::Euler] {
        let phi = face_element(&g, mode, DEFAULT_BUDGET)?;
        let dist = genus_poly_from_face_element(&phi, g.vertex_count(), g.edge_count(), mode)?;
        println!("{mode:?}: {} permutations in the face element", phi.len());
        println!("{mode:?}: distribution {dist}");
    }
    Ok(())
}
