use embdist::distributions::{derived_tables, doubled_cycle_via_ped, ped_vector_oracle, PedType};
use embdist::graph::{named, Oracle};

fn main() -> embdist::Result<()> {
    let g = named::doubled_path(3)?;
    let v = ped_vector_oracle(&Oracle::default(), &g, 0, 2)?;
    for ty in PedType::ALL {
        println!("{:>4}  {}", ty.name(), v.get(ty));
    }

    let tables = derived_tables()?;
    for n in 2..=6 {
        println!("E_{n} = {}", doubled_cycle_via_ped(n, tables)?);
    }
    Ok(())
}
