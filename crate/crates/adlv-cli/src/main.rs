fn main() {
    eprintln!("adlv: command-line interface not wired up yet");
    std::process::exit(2);
}
