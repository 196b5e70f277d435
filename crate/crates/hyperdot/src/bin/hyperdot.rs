fn main() {
    std::process::exit(hyperdot::workbench::run());
}
