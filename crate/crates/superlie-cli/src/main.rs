fn main() {
    println!("superlie");
}
