#include "progress_lab/litmus_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "progress_lab/errors.hpp"

namespace progress_lab {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LitmusTest run() {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const std::size_t eol = text_.find('\n', pos);
            const std::string_view line = text_.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            ++lineNo_;
            parseLine(tokenize(line));
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
        finishThread();
        if (!sawTest_) fail(lineNo_, 1, "missing 'test <name>' header");
        if (test_.threads.empty()) fail(lineNo_, 1, "test declares no threads");
        return std::move(test_);
    }

private:
    struct PendingJump {
        std::uint32_t target;
        std::size_t line;
        std::size_t column;
    };

    [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& reason) const {
        throw ParseError(line, column, reason);
    }

    std::uint32_t number(const Token& tok, std::string_view digits, std::size_t column) const {
        std::uint32_t value = 0;
        const auto* first = digits.data();
        const auto* last = digits.data() + digits.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (digits.empty() || ec != std::errc{} || ptr != last) {
            fail(lineNo_, column, "expected a natural number, got '" + std::string(tok.text) + "'");
        }
        return value;
    }

    std::uint32_t number(const Token& tok) const { return number(tok, tok.text, tok.column); }

    void expectCount(const std::vector<Token>& toks, std::size_t n, std::string_view what) const {
        if (toks.size() != n) {
            const std::size_t col = toks.size() > n ? toks[n].column : toks.back().column + toks.back().text.size();
            fail(lineNo_, col, "malformed '" + std::string(what) + "' line");
        }
    }

    void parseLine(const std::vector<Token>& toks) {
        if (toks.empty()) return;
        const auto& head = toks.front();
        if (head.text == "test") {
            if (sawTest_) fail(lineNo_, head.column, "duplicate 'test' header");
            expectCount(toks, 2, "test");
            test_.name = std::string(toks[1].text);
            sawTest_ = true;
        } else if (head.text == "locations" || head.text == "values") {
            requireHeader(head);
            if (!test_.threads.empty()) fail(lineNo_, head.column, "'" + std::string(head.text) + "' must precede threads");
            expectCount(toks, 2, head.text);
            const std::uint32_t n = number(toks[1]);
            if (n == 0) fail(lineNo_, toks[1].column, std::string(head.text) + " must be positive");
            (head.text == "locations" ? test_.numLocations : test_.valueDomainSize) = n;
        } else if (head.text == "thread") {
            requireHeader(head);
            parseThreadHeader(toks);
        } else {
            parseInstruction(toks);
        }
    }

    void requireHeader(const Token& at) const {
        if (!sawTest_) fail(lineNo_, at.column, "expected 'test <name>' first");
    }

    void parseThreadHeader(const std::vector<Token>& toks) {
        // Accept both `thread 0:` and `thread 0 :`.
        std::string_view idText;
        std::size_t idColumn = 0;
        if (toks.size() == 2 && toks[1].text.size() > 1 && toks[1].text.back() == ':') {
            idText = toks[1].text.substr(0, toks[1].text.size() - 1);
            idColumn = toks[1].column;
        } else if (toks.size() == 3 && toks[2].text == ":") {
            idText = toks[1].text;
            idColumn = toks[1].column;
        } else {
            fail(lineNo_, toks.front().column, "expected 'thread <id>:'");
        }
        finishThread();
        const std::uint32_t id = number(toks[1], idText, idColumn);
        if (id != test_.threads.size()) {
            fail(lineNo_, idColumn, "thread ids must be consecutive from 0; expected " + std::to_string(test_.threads.size()));
        }
        if (test_.threads.size() >= kMaxThreads) fail(lineNo_, idColumn, "too many threads");
        test_.threads.emplace_back();
        inThread_ = true;
    }

    void parseInstruction(const std::vector<Token>& toks) {
        const auto& head = toks.front();
        if (!inThread_) fail(lineNo_, head.column, "unexpected '" + std::string(head.text) + "'");
        if (head.text.size() < 2 || head.text.back() != ':') fail(lineNo_, head.column, "expected '<index>:'");
        auto& program = test_.threads.back();
        const std::uint32_t index = number(head, head.text.substr(0, head.text.size() - 1), head.column);
        if (index != program.size()) {
            fail(lineNo_, head.column, "instruction indices must be consecutive; expected " + std::to_string(program.size()));
        }
        if (toks.size() < 2 || toks[1].text != "axb") {
            fail(lineNo_, toks.size() < 2 ? head.column + head.text.size() : toks[1].column, "expected 'axb'");
        }

        AxbInstruction in;
        std::optional<std::size_t> locCol, cmpCol, jumpCol, exchCol;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            const auto& tok = toks[i];
            const auto eq = tok.text.find('=');
            if (eq == std::string_view::npos) fail(lineNo_, tok.column, "expected key=value, got '" + std::string(tok.text) + "'");
            const auto key = tok.text.substr(0, eq);
            const auto val = tok.text.substr(eq + 1);
            const std::size_t valCol = tok.column + eq + 1;
            auto once = [&](std::optional<std::size_t>& seen) {
                if (seen) fail(lineNo_, tok.column, "duplicate key '" + std::string(key) + "'");
                seen = tok.column;
            };
            if (key == "loc") {
                once(locCol);
                in.checkLoc = LocationId{number(tok, val, valCol)};
                if (in.checkLoc.index >= test_.numLocations) fail(lineNo_, valCol, "location out of range");
            } else if (key == "cmp") {
                once(cmpCol);
                in.checkVal = Value{number(tok, val, valCol)};
                if (in.checkVal.v >= test_.valueDomainSize) fail(lineNo_, valCol, "compare value out of range");
            } else if (key == "jump") {
                once(jumpCol);
                in.jumpTarget = number(tok, val, valCol);
                pending_.push_back(PendingJump{in.jumpTarget, lineNo_, valCol});
            } else if (key == "exch") {
                once(exchCol);
                if (val == "none") {
                    in.doExch = false;
                } else {
                    in.doExch = true;
                    in.exchVal = Value{number(tok, val, valCol)};
                    if (in.exchVal.v >= test_.valueDomainSize) fail(lineNo_, valCol, "exchange value out of range");
                }
            } else {
                fail(lineNo_, tok.column, "unknown key '" + std::string(key) + "'");
            }
        }
        const std::size_t endCol = toks.back().column + toks.back().text.size();
        if (!locCol) fail(lineNo_, endCol, "missing 'loc='");
        if (!cmpCol) fail(lineNo_, endCol, "missing 'cmp='");
        if (!jumpCol) fail(lineNo_, endCol, "missing 'jump='");
        if (!exchCol) fail(lineNo_, endCol, "missing 'exch='");
        program.push_back(in);
    }

    // Jump targets can only be range-checked once the thread is complete.
    void finishThread() {
        if (!inThread_) return;
        const auto& program = test_.threads.back();
        if (program.empty()) fail(lineNo_, 1, "thread " + std::to_string(test_.threads.size() - 1) + " has no instructions");
        for (const auto& j : pending_) {
            if (j.target > program.size()) fail(j.line, j.column, "jump target out of range");
        }
        pending_.clear();
        inThread_ = false;
    }

    std::string_view text_;
    std::size_t lineNo_ = 0;
    LitmusTest test_;
    bool sawTest_ = false;
    bool inThread_ = false;
    std::vector<PendingJump> pending_;
};

}  // namespace

LitmusTest parseLitmus(std::string_view text) {
    return Parser(text).run();
}

std::string serializeLitmus(const LitmusTest& test) {
    std::ostringstream out;
    out << "test " << test.name << '\n';
    out << "locations " << test.numLocations << '\n';
    out << "values " << test.valueDomainSize << '\n';
    for (std::size_t t = 0; t < test.threads.size(); ++t) {
        out << "thread " << t << ":\n";
        const auto& program = test.threads[t];
        for (std::size_t i = 0; i < program.size(); ++i) {
            const auto& in = program[i];
            out << "  " << i << ": axb loc=" << in.checkLoc.index << " cmp=" << in.checkVal.v << " jump=" << in.jumpTarget
                << " exch=";
            if (in.doExch) {
                out << in.exchVal.v;
            } else {
                out << "none";
            }
            out << '\n';
        }
    }
    return out.str();
}

LitmusTest loadLitmusFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parseLitmus(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.reason());
    }
}

}  // namespace progress_lab
