#include "tfold/fixtures.hpp"

#include "tfold/errors.hpp"

namespace tfold {

ThreefoldData chen_delta18() {
    ThreefoldData X;
    X.chi = 2;
    X.q = 0;
    X.pg = 0;
    X.basket = Basket::parse("4*(1,2) 3*(1,3) 2*(1,4) (2,5) (4,9) (5,13)");
    X.k3 = Rational(Int(1), Int(1170));
    X.known_plurigenera = {{2, Int(0)}};
    return X;
}

ThreefoldData fixture_by_name(std::string_view name) {
    if (name == "chen-delta18") return chen_delta18();
    throw DataError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"chen-delta18"}; }

}  // namespace tfold
