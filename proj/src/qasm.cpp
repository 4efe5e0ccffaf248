// Copyright 2026 The qnn-circuit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnn/qasm.hpp"

#include "qnn/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qnn {

namespace {

std::string format_angle(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string tag_comment(const StageTag &tag) {
    return "// stage " + std::string(stage_name(tag.stage)) + " " +
           std::to_string(static_cast<int>(tag.neuron));
}

std::optional<Stage> stage_from_name(std::string_view name) {
    for (Stage s : {Stage::None, Stage::Prep, Stage::Sign, Stage::Quadratic,
                    Stage::Output, Stage::Norm}) {
        if (stage_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (GateKind k : {GateKind::X, GateKind::H, GateKind::Z, GateKind::RY,
                       GateKind::CX, GateKind::CZ, GateKind::CCX}) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

// Character cursor over one line; columns are 1-based.
class Cursor {
  public:
    Cursor(std::string_view line, std::size_t line_no)
        : line_(line), line_no_(line_no) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(what, line_no_, pos_ + 1);
    }
    [[noreturn]] void fail_at(const std::string &what, std::size_t pos) const {
        throw ParseError(what, line_no_, pos + 1);
    }

    void skip_ws() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) {
            ++pos_;
        }
    }
    [[nodiscard]] bool at_end() {
        skip_ws();
        return pos_ >= line_.size();
    }
    [[nodiscard]] bool peek(char c) {
        skip_ws();
        return pos_ < line_.size() && line_[pos_] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= line_.size() || line_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    void expect_word(std::string_view word) {
        skip_ws();
        if (line_.substr(pos_, word.size()) != word) {
            fail("expected '" + std::string(word) + "'");
        }
        pos_ += word.size();
    }
    std::string_view identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an identifier");
        }
        return line_.substr(start, pos_ - start);
    }
    std::size_t integer() {
        skip_ws();
        std::size_t v = 0;
        const auto res = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), v);
        if (res.ec != std::errc{}) {
            fail("expected an integer");
        }
        pos_ = static_cast<std::size_t>(res.ptr - line_.data());
        return v;
    }
    double real() {
        skip_ws();
        double v = 0.0;
        const auto res = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), v);
        if (res.ec != std::errc{}) {
            fail("expected a number");
        }
        pos_ = static_cast<std::size_t>(res.ptr - line_.data());
        return v;
    }
    void end_statement() {
        expect(';');
        if (!at_end()) {
            fail("unexpected text after ';'");
        }
    }
    [[nodiscard]] std::size_t pos() const noexcept { return pos_; }

  private:
    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

class Parser {
  public:
    Circuit parse(std::string_view text) {
        std::size_t line_no = 0;
        while (!text.empty() || line_no == 0) {
            const std::size_t nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            statement(line, line_no);
            if (text.empty()) {
                break;
            }
        }
        if (!seen_header_) {
            throw ParseError("missing version header", 1, 1);
        }
        if (!circuit_) {
            throw ParseError("missing qreg declaration", line_no, 1);
        }
        if (!measured_.empty()) {
            circuit_->set_measured(measured_);
        }
        return std::move(*circuit_);
    }

  private:
    void statement(std::string_view raw, std::size_t line_no) {
        const std::string_view body = trim(raw);
        if (body.empty()) {
            return;
        }
        if (body.starts_with("//")) {
            comment(raw, line_no);
            return;
        }
        Cursor cur(raw, line_no);
        if (!seen_header_) {
            if (!body.starts_with("OPENQASM")) {
                cur.skip_ws();
                cur.fail("missing version header");
            }
            cur.expect_word("OPENQASM");
            cur.skip_ws();
            const std::size_t at = cur.pos();
            const double version = cur.real();
            if (version != 2.0) {
                cur.fail_at("unsupported OPENQASM version", at);
            }
            cur.end_statement();
            seen_header_ = true;
            return;
        }
        const std::size_t word_at = (cur.skip_ws(), cur.pos());
        const std::string_view word = cur.identifier();
        if (word == "include") {
            cur.skip_ws();
            cur.expect_word("\"qelib1.inc\"");
            cur.end_statement();
        } else if (word == "qreg") {
            qreg(cur, word_at);
        } else if (word == "creg") {
            creg(cur, word_at);
        } else if (word == "measure") {
            measure(cur);
        } else if (auto kind = gate_from_name(word)) {
            gate(cur, *kind);
        } else {
            cur.fail_at("unknown gate '" + std::string(word) + "'", word_at);
        }
    }

    void comment(std::string_view raw, std::size_t line_no) {
        Cursor cur(raw, line_no);
        cur.expect_word("//");
        cur.skip_ws();
        const std::string_view rest = trim(raw.substr(cur.pos()));
        if (rest.starts_with("stage ")) {
            cur.expect_word("stage");
            const std::size_t at = (cur.skip_ws(), cur.pos());
            auto stage = stage_from_name(cur.identifier());
            if (!stage) {
                cur.fail_at("unknown stage name", at);
            }
            cur.skip_ws();
            bool negative = false;
            if (cur.peek('-')) {
                cur.expect('-');
                negative = true;
            }
            const auto n = static_cast<int>(cur.integer());
            tag_ = {*stage, static_cast<std::int8_t>(negative ? -n : n)};
        } else if (rest.starts_with("register ")) {
            if (!circuit_) {
                cur.fail("register comment before qreg declaration");
            }
            cur.expect_word("register");
            const std::string name(cur.identifier());
            cur.expect(':');
            std::vector<Qubit> qubits;
            while (!cur.at_end()) {
                const std::size_t at = cur.pos();
                const Qubit q = cur.integer();
                if (q >= circuit_->qubit_count()) {
                    cur.fail_at("register qubit out of range", at);
                }
                qubits.push_back(q);
            }
            circuit_->add_register(name, std::move(qubits));
        }
        // Any other comment is free text.
    }

    void qreg(Cursor &cur, std::size_t at) {
        if (circuit_) {
            cur.fail_at("only one qreg is supported", at);
        }
        if (cur.identifier() != "q") {
            cur.fail_at("qreg must be named 'q'", at);
        }
        cur.expect('[');
        const std::size_t size_at = (cur.skip_ws(), cur.pos());
        const std::size_t n = cur.integer();
        cur.expect(']');
        cur.end_statement();
        try {
            circuit_.emplace(n);
        } catch (const std::invalid_argument &e) {
            cur.fail_at(e.what(), size_at);
        }
    }

    void creg(Cursor &cur, std::size_t at) {
        if (creg_size_) {
            cur.fail_at("only one creg is supported", at);
        }
        if (cur.identifier() != "c") {
            cur.fail_at("creg must be named 'c'", at);
        }
        cur.expect('[');
        creg_size_ = cur.integer();
        cur.expect(']');
        cur.end_statement();
    }

    Qubit qubit_arg(Cursor &cur) {
        const std::size_t at = (cur.skip_ws(), cur.pos());
        if (!circuit_) {
            cur.fail_at("gate before qreg declaration", at);
        }
        if (cur.identifier() != "q") {
            cur.fail_at("unknown quantum register", at);
        }
        cur.expect('[');
        const std::size_t idx_at = (cur.skip_ws(), cur.pos());
        const Qubit q = cur.integer();
        cur.expect(']');
        if (q >= circuit_->qubit_count()) {
            cur.fail_at("qubit index " + std::to_string(q) + " out of range for q[" +
                            std::to_string(circuit_->qubit_count()) + "]",
                        idx_at);
        }
        return q;
    }

    void measure(Cursor &cur) {
        const Qubit q = qubit_arg(cur);
        cur.expect('-');
        cur.expect('>');
        const std::size_t at = (cur.skip_ws(), cur.pos());
        if (cur.identifier() != "c") {
            cur.fail_at("unknown classical register", at);
        }
        cur.expect('[');
        const std::size_t bit_at = (cur.skip_ws(), cur.pos());
        const std::size_t bit = cur.integer();
        cur.expect(']');
        cur.end_statement();
        if (!creg_size_ || bit >= *creg_size_) {
            cur.fail_at("classical bit out of range", bit_at);
        }
        if (bit != measured_.size()) {
            cur.fail_at("measurements must fill c in order", bit_at);
        }
        measured_.push_back(q);
    }

    void gate(Cursor &cur, GateKind kind) {
        Gate g{kind, {0, 0, 0}, 0.0, tag_};
        if (kind == GateKind::RY) {
            cur.expect('(');
            g.angle = cur.real();
            cur.expect(')');
        } else if (cur.peek('(')) {
            cur.fail(std::string(gate_name(kind)) + " takes no parameters");
        }
        const std::size_t start = (cur.skip_ws(), cur.pos());
        for (std::size_t i = 0; i < gate_arity(kind); ++i) {
            if (i > 0) {
                cur.expect(',');
            }
            g.qubits[i] = qubit_arg(cur);
        }
        cur.end_statement();
        if (!measured_.empty()) {
            cur.fail_at("gate after measurement", start);
        }
        try {
            circuit_->append(g);
        } catch (const std::exception &e) {
            cur.fail_at(e.what(), start);
        }
    }

    bool seen_header_ = false;
    std::optional<Circuit> circuit_;
    std::optional<std::size_t> creg_size_;
    std::vector<Qubit> measured_;
    StageTag tag_{};
};

} // namespace

std::string export_qasm(const Circuit &circuit) {
    if (circuit.init()) {
        throw std::invalid_argument(
            "circuit contains a direct-init block; compile with synthesized prep");
    }
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(circuit.qubit_count()) + "];\n";
    if (!circuit.measured().empty()) {
        out += "creg c[" + std::to_string(circuit.measured().size()) + "];\n";
    }
    for (const NamedRegister &r : circuit.registers()) {
        out += "// register " + r.name + ":";
        for (Qubit q : r.qubits) {
            out += " " + std::to_string(q);
        }
        out += "\n";
    }
    StageTag current{};
    for (const Gate &g : circuit.gates()) {
        if (!(g.tag == current)) {
            current = g.tag;
            out += tag_comment(current) + "\n";
        }
        out += gate_name(g.kind);
        if (g.kind == GateKind::RY) {
            out += "(" + format_angle(g.angle) + ")";
        }
        for (std::size_t i = 0; i < g.arity(); ++i) {
            out += (i == 0 ? " q[" : ",q[") + std::to_string(g.qubits[i]) + "]";
        }
        out += ";\n";
    }
    for (std::size_t k = 0; k < circuit.measured().size(); ++k) {
        out += "measure q[" + std::to_string(circuit.measured()[k]) + "] -> c[" +
               std::to_string(k) + "];\n";
    }
    return out;
}

Circuit parse_qasm(std::string_view text) { return Parser{}.parse(text); }

} // namespace qnn
