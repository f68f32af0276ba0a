use gradings::catalog::{compute_goldens, Context};
use gradings::field::Field;

fn main() {
    let f = Field::gf(13).unwrap();
    let mut ctx = Context::new(f);
    let goldens = compute_goldens(&mut ctx).expect("golden computation");
    let path = std::env::args().nth(1).unwrap_or_else(|| "goldens.json".into());
    std::fs::write(&path, goldens.to_json()).expect("write goldens");
    println!("wrote {} entries to {path}", goldens.entries.len());
}
