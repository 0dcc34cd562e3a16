fn main() {
    std::process::exit(eph_clifford::emit::cli_main(std::env::args_os()));
}
