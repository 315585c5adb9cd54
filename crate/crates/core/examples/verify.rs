use embdist::verify::{self, VerifyOptions};

fn main() {
    let opts = VerifyOptions { only: vec![1, 3, 6, 7, 9], ..VerifyOptions::default() };
    for check in verify::run(&opts) {
        println!("{check}");
    }
}
