#include "flatspin/constructions.hpp"

#include <stdexcept>

namespace flatspin {

std::optional<Stage> stage_from_name(std::string_view name) {
    if (name == "A0") return Stage::A0;
    if (name == "A1") return Stage::A1;
    if (name == "A") return Stage::A;
    if (name == "B") return Stage::B;
    if (name == "C") return Stage::C;
    if (name == "E") return Stage::E;
    if (name == "F") return Stage::F;
    return std::nullopt;
}

const char* stage_name(Stage stage) {
    switch (stage) {
        case Stage::A0: return "A0";
        case Stage::A1: return "A1";
        case Stage::A: return "A";
        case Stage::B: return "B";
        case Stage::C: return "C";
        case Stage::E: return "E";
        case Stage::F: return "F";
    }
    return "?";
}

namespace {

void require_rank(std::size_t d) {
    if (d < 2) throw std::invalid_argument("family rank must be at least 2");
}

DefiningMatrix build_a0(std::size_t d) {
    DefiningMatrix A(d, d - 1);
    const DSymbol half_turn = DSymbol::from_code(1);
    for (std::size_t l = 0; l < d - 1; ++l) {
        A.set(l, l, half_turn);
        A.set(d - 1, l, half_turn);
    }
    return A;
}

DefiningMatrix build_a1(std::size_t d) {
    DefiningMatrix A(d, d * (d - 1) / 2);
    const DSymbol two = DSymbol::from_code(2);
    const DSymbol three = DSymbol::from_code(3);
    std::size_t col = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            A.set(i, col, two);
            A.set(j, col, three);
            ++col;
        }
    return A;
}

DefiningMatrix build_b(std::size_t d) {
    DefiningMatrix B(d, 1);
    for (std::size_t i = 0; i < d; ++i) B.set(i, 0, DSymbol::from_code(2));
    return B;
}

DefiningMatrix build_c(std::size_t d) {
    DefiningMatrix C(d, 1);
    C.set(0, 0, DSymbol::from_code(2));
    return C;
}

}  // namespace

std::size_t n_of_d(std::size_t d) {
    require_rank(d);
    const std::size_t base = d * (d + 1) / 2;
    if (d % 2 == 0) return base + 2;
    if (d % 4 == 1) return base + 1;
    return base + 3;  // d = 3 mod 4
}

DefiningMatrix build_stage(Stage stage, std::size_t d) {
    require_rank(d);
    switch (stage) {
        case Stage::A0: return build_a0(d);
        case Stage::A1: return build_a1(d);
        case Stage::A: return concat(build_a0(d), build_a1(d));
        case Stage::B: return build_b(d);
        case Stage::C: return build_c(d);
        case Stage::E: {
            const DefiningMatrix A = build_stage(Stage::A, d);
            if (d % 2 == 0)
                return concat(concat(A, build_b(d)), concat(build_c(d), build_c(d)));
            if (d % 4 == 1) return concat(A, concat(build_b(d), build_b(d)));
            return A;  // d = 3 mod 4
        }
        case Stage::F: {
            const DefiningMatrix E = build_stage(Stage::E, d);
            if (d % 4 != 3) return E;
            const DefiningMatrix C = build_c(d);
            return concat(concat(E, concat(C, C)), concat(C, C));
        }
    }
    throw std::invalid_argument("unknown stage");
}

}  // namespace flatspin
