#include "qobf/key_codec.hpp"

#include "qobf/error.hpp"

#include <cstdint>
#include <sstream>

namespace qobf {

std::string encode_key(const ObfuscationKey& key) {
    std::ostringstream out;
    for (std::size_t r = 0; r < key.records.size(); ++r) {
        if (r) out << '@';
        const auto& rec = key.records[r];
        out << rec.gate_index << '#';
        for (std::size_t i = 0; i < rec.qubits.size(); ++i) {
            if (i) out << '|';
            out << rec.qubits[i];
        }
    }
    return out.str();
}

namespace {

class KeyScanner {
public:
    explicit KeyScanner(const std::string& text) : text_(text) {}

    std::size_t integer() {
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
            fail("expected a digit");
        std::size_t value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            if (value > (SIZE_MAX - 9) / 10) fail("integer too large");
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool done() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("key syntax error at offset " + std::to_string(pos_) + ": " + msg);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

ObfuscationKey decode_key(const std::string& text, const GatePool& pool,
                          std::size_t circuit_width) {
    ObfuscationKey key;
    if (text.empty()) return key;

    KeyScanner scan(text);
    for (;;) {
        InsertionRecord rec;
        rec.gate_index = scan.integer();
        scan.expect('#');
        rec.qubits.push_back(scan.integer());
        while (scan.accept('|')) rec.qubits.push_back(scan.integer());
        check_record(rec, pool, circuit_width);
        key.records.push_back(std::move(rec));
        if (scan.done()) break;
        scan.expect('@');
        if (scan.done()) scan.fail("trailing demarcator");
    }
    return key;
}

} // namespace qobf
