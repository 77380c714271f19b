fn main() {
    println!("nonrep");
}
