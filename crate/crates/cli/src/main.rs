fn main() { println!("catkit"); }
