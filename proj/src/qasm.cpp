#include "qobf/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

namespace qobf {

namespace {

constexpr double kPi = 3.14159265358979323846;

enum class Tok { Ident, Number, Symbol, String, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.span = {line_, col_, 1};
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                advance();
            t.type = Tok::Ident;
            t.text = src_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
                    src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > start &&
                     (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
                advance();
            t.type = Tok::Number;
            t.text = src_.substr(start, pos_ - start);
        } else if (c == '"') {
            std::size_t start = pos_;
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
            if (pos_ < src_.size() && src_[pos_] == '"') advance();
            t.type = Tok::String;
            t.text = src_.substr(start, pos_ - start);
        } else {
            advance();
            t.type = Tok::Symbol;
            if ((c == '-' && pos_ < src_.size() && src_[pos_] == '>')) {
                advance();
                t.text = "->";
            } else {
                t.text = std::string(1, c);
            }
        }
        t.span.length = t.text.empty() ? 1 : t.text.size();
        return t;
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        for (;;) {
            while (pos_ < src_.size() &&
                   std::isspace(static_cast<unsigned char>(src_[pos_])))
                advance();
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            break;
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { cur_ = lexer_.next(); }

    ParseResult run() {
        parse_program();
        ParseResult result;
        result.diagnostics = std::move(diags_);
        if (!failed_) {
            // the parser enforces order; validate() backstops the rest
            for (const auto& v : validate(circuit_))
                result.diagnostics.push_back({{0, 0, 0}, v.message,
                                              ParseDiagnostic::Severity::Error});
        }
        bool any_error = false;
        for (const auto& d : result.diagnostics)
            any_error |= d.severity == ParseDiagnostic::Severity::Error;
        if (!any_error) result.circuit = std::move(circuit_);
        return result;
    }

private:
    void error(const std::string& msg) {
        diags_.push_back({cur_.span, msg, ParseDiagnostic::Severity::Error});
        failed_ = true;
    }

    void warn(const std::string& msg) {
        diags_.push_back({cur_.span, msg, ParseDiagnostic::Severity::Warning});
    }

    void bump() { cur_ = lexer_.next(); }

    bool accept_symbol(const char* s) {
        if (cur_.type == Tok::Symbol && cur_.text == s) {
            bump();
            return true;
        }
        return false;
    }

    bool expect_symbol(const char* s) {
        if (accept_symbol(s)) return true;
        error(std::string("expected '") + s + "'");
        return false;
    }

    void skip_statement() {
        while (cur_.type != Tok::End && !(cur_.type == Tok::Symbol && cur_.text == ";"))
            bump();
        accept_symbol(";");
    }

    void parse_program() {
        if (cur_.type != Tok::Ident || cur_.text != "OPENQASM") {
            error("expected 'OPENQASM 2.0;' header");
            return;
        }
        bump();
        if (cur_.type != Tok::Number || cur_.text != "2.0") {
            error("only OpenQASM version 2.0 is supported");
            return;
        }
        bump();
        if (!expect_symbol(";")) return;

        while (cur_.type != Tok::End && !failed_) parse_statement();
    }

    void parse_statement() {
        if (cur_.type != Tok::Ident) {
            error("expected a statement");
            return;
        }
        const std::string head = cur_.text;
        if (head == "include") {
            bump();
            if (cur_.type != Tok::String || cur_.text != "\"qelib1.inc\"")
                warn("only \"qelib1.inc\" is recognized; include ignored");
            bump();
            expect_symbol(";");
        } else if (head == "qreg") {
            parse_qreg();
        } else if (head == "creg") {
            parse_creg();
        } else if (head == "barrier") {
            warn("barrier discarded (not represented in the IR)");
            bump();
            skip_statement();
        } else if (head == "measure") {
            parse_measure();
        } else {
            parse_gate();
        }
    }

    void parse_qreg() {
        bump();
        if (!qreg_name_.empty()) {
            error("multiple qreg declarations are not supported");
            return;
        }
        auto decl = parse_decl();
        if (!decl) return;
        qreg_name_ = decl->first;
        if (decl->second == 0 || decl->second > 64) {
            error("qreg size must be between 1 and 64");
            return;
        }
        circuit_.num_qubits = decl->second;
    }

    void parse_creg() {
        bump();
        if (!creg_name_.empty()) {
            error("multiple creg declarations are not supported");
            return;
        }
        auto decl = parse_decl();
        if (!decl) return;
        creg_name_ = decl->first;
        creg_size_ = decl->second;
    }

    std::optional<std::pair<std::string, std::size_t>> parse_decl() {
        if (cur_.type != Tok::Ident) {
            error("expected register name");
            return std::nullopt;
        }
        std::string name = cur_.text;
        bump();
        if (!expect_symbol("[")) return std::nullopt;
        auto size = parse_uint();
        if (!size) return std::nullopt;
        if (!expect_symbol("]")) return std::nullopt;
        if (!expect_symbol(";")) return std::nullopt;
        return std::make_pair(name, *size);
    }

    std::optional<std::size_t> parse_uint() {
        if (cur_.type != Tok::Number || cur_.text.find_first_not_of("0123456789") !=
                                            std::string::npos) {
            error("expected a non-negative integer");
            return std::nullopt;
        }
        std::size_t value = 0;
        for (char c : cur_.text) {
            if (value > (SIZE_MAX - 9) / 10) {
                error("integer literal too large");
                return std::nullopt;
            }
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        bump();
        return value;
    }

    std::optional<std::size_t> parse_qubit_ref() {
        if (cur_.type != Tok::Ident || cur_.text != qreg_name_ || qreg_name_.empty()) {
            error("expected qubit reference '" +
                  (qreg_name_.empty() ? std::string("<qreg>") : qreg_name_) + "[i]'");
            return std::nullopt;
        }
        bump();
        if (!expect_symbol("[")) return std::nullopt;
        auto idx = parse_uint();
        if (!idx) return std::nullopt;
        if (!expect_symbol("]")) return std::nullopt;
        if (*idx >= circuit_.num_qubits) {
            error("qubit index out of declared register range");
            return std::nullopt;
        }
        return idx;
    }

    // decimal | pi | pi/k | k*pi | k*pi/m, with optional leading '-'
    std::optional<double> parse_angle() {
        double sign = 1.0;
        if (accept_symbol("-")) sign = -1.0;
        double value = 0.0;
        if (cur_.type == Tok::Ident && cur_.text == "pi") {
            bump();
            value = kPi;
            if (accept_symbol("/")) {
                auto d = parse_number();
                if (!d) return std::nullopt;
                value /= *d;
            }
        } else if (cur_.type == Tok::Number) {
            auto k = parse_number();
            if (!k) return std::nullopt;
            value = *k;
            if (accept_symbol("*")) {
                if (cur_.type != Tok::Ident || cur_.text != "pi") {
                    error("expected 'pi' after '*'");
                    return std::nullopt;
                }
                bump();
                value *= kPi;
                if (accept_symbol("/")) {
                    auto d = parse_number();
                    if (!d) return std::nullopt;
                    value /= *d;
                }
            }
        } else {
            error("expected an angle literal");
            return std::nullopt;
        }
        return sign * value;
    }

    std::optional<double> parse_number() {
        if (cur_.type != Tok::Number) {
            error("expected a number");
            return std::nullopt;
        }
        try {
            const double v = std::stod(cur_.text);
            bump();
            return v;
        } catch (const std::exception&) {
            error("malformed numeric literal");
            return std::nullopt;
        }
    }

    void parse_gate() {
        const Token head = cur_;
        const auto kind = gate_from_name(head.text);
        if (!kind) {
            diags_.push_back({head.span, "unknown gate '" + head.text + "'",
                              ParseDiagnostic::Severity::Error});
            failed_ = true;
            return;
        }
        bump();

        GateInstance gate;
        gate.kind = *kind;
        if (param_count(*kind) == 1) {
            if (!expect_symbol("(")) return;
            auto angle = parse_angle();
            if (!angle) return;
            gate.params.push_back(*angle);
            if (!expect_symbol(")")) return;
        }

        for (;;) {
            auto q = parse_qubit_ref();
            if (!q) return;
            gate.qubits.push_back(*q);
            if (!accept_symbol(",")) break;
        }
        if (!expect_symbol(";")) return;

        if (gate.qubits.size() != arity(*kind)) {
            diags_.push_back({head.span,
                              "gate '" + head.text + "' expects " +
                                  std::to_string(arity(*kind)) + " qubit(s)",
                              ParseDiagnostic::Severity::Error});
            failed_ = true;
            return;
        }
        for (std::size_t q : gate.qubits) {
            if (measured_.count(q)) {
                diags_.push_back({head.span,
                                  "gate on qubit " + std::to_string(q) +
                                      " after its measurement (measurement is terminal)",
                                  ParseDiagnostic::Severity::Error});
                failed_ = true;
                return;
            }
        }
        for (std::size_t i = 0; i < gate.qubits.size(); ++i)
            for (std::size_t j = i + 1; j < gate.qubits.size(); ++j)
                if (gate.qubits[i] == gate.qubits[j]) {
                    diags_.push_back({head.span, "duplicate qubit in operand list",
                                      ParseDiagnostic::Severity::Error});
                    failed_ = true;
                    return;
                }
        circuit_.gates.push_back(std::move(gate));
    }

    void parse_measure() {
        const Token head = cur_;
        bump();
        auto q = parse_qubit_ref();
        if (!q) return;
        if (!expect_symbol("->")) return;
        if (cur_.type != Tok::Ident || creg_name_.empty() || cur_.text != creg_name_) {
            error("expected classical register reference");
            return;
        }
        bump();
        if (!expect_symbol("[")) return;
        auto c = parse_uint();
        if (!c) return;
        if (!expect_symbol("]")) return;
        if (!expect_symbol(";")) return;
        if (*c >= creg_size_) {
            diags_.push_back({head.span, "classical bit index out of declared range",
                              ParseDiagnostic::Severity::Error});
            failed_ = true;
            return;
        }
        if (!measured_.insert(*q).second) {
            diags_.push_back({head.span, "qubit measured more than once",
                              ParseDiagnostic::Severity::Error});
            failed_ = true;
            return;
        }
        circuit_.measurements.push_back({*q, *c});
    }

    Lexer lexer_;
    Token cur_;
    QuantumCircuit circuit_;
    std::string qreg_name_;
    std::string creg_name_;
    std::size_t creg_size_ = 0;
    std::set<std::size_t> measured_;
    std::vector<ParseDiagnostic> diags_;
    bool failed_ = false;
};

std::string format_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

} // namespace

ParseResult parse_qasm(const std::string& source) {
    return Parser(source).run();
}

std::string emit_qasm(const QuantumCircuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits << "];\n";
    if (!circuit.measurements.empty())
        out << "creg c[" << circuit.measurements.size() << "];\n";
    for (const auto& gate : circuit.gates) {
        out << gate_name(gate.kind);
        if (!gate.params.empty()) out << '(' << format_angle(gate.params[0]) << ')';
        out << ' ';
        for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
            if (i) out << ',';
            out << "q[" << gate.qubits[i] << ']';
        }
        out << ";\n";
    }
    for (const auto& meas : circuit.measurements)
        out << "measure q[" << meas.qubit << "] -> c[" << meas.clbit << "];\n";
    return out.str();
}

} // namespace qobf
