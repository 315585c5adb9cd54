use embdist::distributions::{diff_against_printed, derived_tables};

fn main() -> embdist::Result<()> {
    let tables = derived_tables()?;
    println!("{}", tables.to_json());
    print!("{}", diff_against_printed(tables)?.report());
    Ok(())
}
