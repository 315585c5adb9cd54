//! A family given as JSON: copies of a triangle chained by single edges.

use embdist::transfer::{FamilySpec, TransferEngine};

const SPEC: &str = r#"{
  "h": {"vertices": 4, "edges": [[0, 1], [1, 2], [2, 0], [0, 3]]},
  "glue": "3>0",
  "kind": "circular",
  "mode": "genus",
  "label": "necklace of triangles"
}"#;

fn main() -> embdist::Result<()> {
    let spec = FamilySpec::from_json(SPEC)?;
    let engine = TransferEngine::new(spec)?;
    for (n, p) in engine.family_series(4)?.iter().enumerate() {
        println!("n = {}: {p}", n + 1);
    }
    println!("{}", engine.family_rational_gf(4, 4, 2)?);
    Ok(())
}
