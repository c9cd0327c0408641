fn main() -> ! {
    pskaudit::cli::main()
}
