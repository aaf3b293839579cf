#include "singclass/ypoly.hpp"

#include <sstream>

namespace singclass {

std::string YPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : c_) {
        Rational a = v;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a.str();
            continue;
        }
        if (a != Rational(1)) os << a.str() << "*";
        os << var;
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

} // namespace singclass
