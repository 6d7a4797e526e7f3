#ifndef ISOREC_CORE_HPP
#define ISOREC_CORE_HPP

#include "isorec/bigint.hpp"
#include "isorec/modular.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isorec {

/// The bracket [t_1, ..., t_k]: core polynomial C(X) = X^k - t_1 X^{k-1} - ... - t_k
/// and the recursion f_n = t_1 f_{n-1} + ... + t_k f_{n-k}.
class CorePolynomial {
public:
    explicit CorePolynomial(std::vector<i64> t) : t_(std::move(t)) {
        if (t_.empty()) throw std::invalid_argument("core polynomial needs k >= 1");
    }

    /// Parses "[t1,...,tk]"; whitespace anywhere is ignored, brackets optional.
    static CorePolynomial parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (!s.empty() && s.front() == '[') {
            if (s.back() != ']') throw std::invalid_argument("unterminated core bracket: " + std::string(text));
            s = s.substr(1, s.size() - 2);
        }
        if (s.empty()) throw std::invalid_argument("empty core");
        std::vector<i64> t;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const auto comma = s.find(',', pos);
            const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            std::size_t used = 0;
            i64 v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad core entry '" + item + "'");
            }
            if (used != item.size()) throw std::invalid_argument("bad core entry '" + item + "'");
            t.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return CorePolynomial(std::move(t));
    }

    int k() const { return static_cast<int>(t_.size()); }
    /// t_j, 1-based.
    i64 t(int j) const { return t_.at(static_cast<std::size_t>(j - 1)); }
    i64 last() const { return t_.back(); }
    const std::vector<i64>& coefficients() const { return t_; }

    std::vector<BigInt> as_bigints() const { return {t_.begin(), t_.end()}; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t_[i]);
        }
        return s + "]";
    }

    bool operator==(const CorePolynomial&) const = default;
    auto operator<=>(const CorePolynomial&) const = default;

private:
    std::vector<i64> t_;
};

} // namespace isorec

#endif // ISOREC_CORE_HPP
