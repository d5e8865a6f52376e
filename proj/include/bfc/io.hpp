#pragma once

#include <cctype>
#include <string>

#include <json.hpp>

#include "bfc/errors.hpp"
#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

// Canonical truth-table text: "n=<k>;bits=<2^k chars of 0/1, index 0 first>"
// or "n=<k>;hex=<2^k/4 hex digits, little-endian nibbles>" (k >= 2).

inline std::string format_truth_table(const TruthTable& tt) {
    std::string out = "n=" + std::to_string(tt.n()) + ";bits=";
    for (auto b : tt.bits()) out += static_cast<char>('0' + b);
    return out;
}

inline std::string format_truth_table_hex(const TruthTable& tt) {
    if (tt.n() < 2)
        throw InvalidParams("hex truth-table format requires n >= 2");
    static const char* digits = "0123456789abcdef";
    std::string out = "n=" + std::to_string(tt.n()) + ";hex=";
    for (std::size_t nib = 0; nib < tt.size() / 4; ++nib) {
        int v = 0;
        for (int b = 0; b < 4; ++b) v |= tt.bits()[nib * 4 + b] << b;
        out += digits[v];
    }
    return out;
}

inline TruthTable parse_truth_table(const std::string& text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad truth table '" + text + "': " + why);
    };
    if (text.rfind("n=", 0) != 0) throw fail("expected 'n=<k>;...'");
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw fail("missing ';'");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(text.substr(2, semi - 2), &used);
        if (used != semi - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw fail("unparsable variable count");
    }
    if (n < 1 || n > kMaxVariables) throw fail("variable count out of range");
    const std::string body = text.substr(semi + 1);

    std::vector<std::uint8_t> bits(std::size_t{1} << n);
    if (body.rfind("bits=", 0) == 0) {
        const std::string payload = body.substr(5);
        if (payload.size() != bits.size())
            throw fail("expected " + std::to_string(bits.size()) + " bits, got " +
                       std::to_string(payload.size()));
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (payload[i] != '0' && payload[i] != '1') throw fail("bits must be 0/1");
            bits[i] = static_cast<std::uint8_t>(payload[i] - '0');
        }
    } else if (body.rfind("hex=", 0) == 0) {
        if (n < 2) throw fail("hex form requires n >= 2");
        const std::string payload = body.substr(4);
        if (payload.size() != bits.size() / 4)
            throw fail("expected " + std::to_string(bits.size() / 4) + " hex digits");
        for (std::size_t nib = 0; nib < payload.size(); ++nib) {
            const char c = static_cast<char>(std::tolower(payload[nib]));
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else throw fail("bad hex digit");
            for (int b = 0; b < 4; ++b)
                bits[nib * 4 + b] = static_cast<std::uint8_t>((v >> b) & 1);
        }
    } else {
        throw fail("expected 'bits=' or 'hex=' payload");
    }
    return TruthTable(n, std::move(bits));
}

// Polynomial JSON: {"n": k, "terms": [{"mask": "0b...", "coeff": c}, ...]},
// terms sorted by mask. Mask strings are written with n binary digits,
// variable x_0 rightmost.

inline std::string format_mask_binary(Mask mask, int n) {
    std::string s = "0b";
    for (int i = n - 1; i >= 0; --i) s += (mask >> i) & 1 ? '1' : '0';
    return s;
}

inline nlohmann::json poly_to_json(const MultilinearPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto [mask, coeff] : p.terms())
        terms.push_back({{"mask", format_mask_binary(mask, p.n())},
                         {"coeff", coeff}});
    return {{"n", p.n()}, {"terms", terms}};
}

inline MultilinearPoly poly_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::map<Mask, std::int64_t> terms;
        for (const auto& rec : j.at("terms")) {
            const std::string masktext = rec.at("mask").get<std::string>();
            if (masktext.rfind("0b", 0) != 0)
                throw ParseError("monomial mask must start with 0b");
            Mask mask = 0;
            for (std::size_t i = 2; i < masktext.size(); ++i) {
                if (masktext[i] != '0' && masktext[i] != '1')
                    throw ParseError("monomial mask must be binary");
                mask = (mask << 1) | static_cast<Mask>(masktext[i] - '0');
            }
            if (!terms.emplace(mask, rec.at("coeff").get<std::int64_t>()).second)
                throw ParseError("duplicate monomial mask " + masktext);
        }
        return MultilinearPoly(n, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial document: ") + e.what());
    } catch (const InvalidParams& e) {
        throw ParseError(std::string("bad polynomial document: ") + e.what());
    }
}

inline MultilinearPoly parse_poly(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial document: ") + e.what());
    }
    return poly_from_json(j);
}

}  // namespace bfc
