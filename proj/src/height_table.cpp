#include "belyi/height_table.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace belyi {

namespace {

// Exclusive flock held for the object's lifetime.
class FileLock {
public:
    explicit FileLock(const std::filesystem::path& path) {
        fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND, 0644);
        if (fd_ < 0) fail("open", path);
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            fail("lock", path);
        }
    }
    ~FileLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

    void write_all(const std::string& text, const std::filesystem::path& path) const {
        std::size_t done = 0;
        while (done < text.size()) {
            const auto n = ::write(fd_, text.data() + done, text.size() - done);
            if (n < 0) {
                if (errno == EINTR) continue;
                fail("write", path);
            }
            done += static_cast<std::size_t>(n);
        }
    }

    void truncate(const std::filesystem::path& path) const {
        if (::ftruncate(fd_, 0) != 0) fail("truncate", path);
    }

private:
    [[noreturn]] static void fail(const char* what, const std::filesystem::path& path) {
        throw std::runtime_error(std::string("height table: cannot ") + what + " " + path.string() + ": " +
                                 std::strerror(errno));
    }
    int fd_ = -1;
};

std::vector<HeightRecord> read_records(const std::filesystem::path& path) {
    std::vector<HeightRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(record_from_json(json::Json::parse(line)));
        } catch (const std::exception& e) {
            throw json::FormatError(path.string() + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

HeightRecord make_record(const HeightBounds& bounds, std::string timestamp) {
    return {bounds.lambda, bounds.lower, bounds.upper, bounds.exact, bounds.witness.subject, std::move(timestamp)};
}

json::Json to_json(const HeightRecord& record) {
    json::Json coeffs = json::Json::array();
    for (const auto& c : record.witness.coeffs()) coeffs.push_back(c.to_string());
    return json::Json{{"lambda", record.lambda.to_string()},
                      {"lower", json::integer_to_json(record.lower)},
                      {"upper", record.upper},
                      {"exact", record.exact},
                      {"witness_coeffs", coeffs},
                      {"timestamp", record.timestamp}};
}

HeightRecord record_from_json(const json::Json& j) {
    if (!j.is_object()) throw json::FormatError("height record must be an object");
    for (const char* key : {"lambda", "lower", "upper", "exact", "witness_coeffs", "timestamp"}) {
        if (!j.contains(key)) throw json::FormatError(std::string("height record missing '") + key + "'");
    }
    if (!j.at("upper").is_number_unsigned() || !j.at("exact").is_boolean() || !j.at("timestamp").is_string()) {
        throw json::FormatError("height record has mistyped fields");
    }
    HeightRecord record{json::rational_from_json(j.at("lambda")),
                        json::integer_from_json(j.at("lower")),
                        j.at("upper").get<std::size_t>(),
                        j.at("exact").get<bool>(),
                        json::poly_from_json(json::Json{{"coeffs", j.at("witness_coeffs")}}),
                        j.at("timestamp").get<std::string>()};

    if (record.witness.is_constant() || !std::holds_alternative<BelyiCertificate>(certify(record.witness))) {
        throw json::FormatError("witness for " + record.lambda.to_string() + " is not a Belyi polynomial");
    }
    const Rational image = record.witness.evaluate(record.lambda);
    if (image != Rational(0) && image != Rational(1)) {
        throw json::FormatError("witness sends " + record.lambda.to_string() + " to " + image.to_string());
    }
    if (static_cast<std::size_t>(record.witness.degree()) != record.upper) {
        throw json::FormatError("witness degree disagrees with upper bound");
    }
    if (record.lower > record.upper || record.lower < 1) throw json::FormatError("lower bound out of range");
    return record;
}

void append_record(const std::filesystem::path& path, const HeightRecord& record) {
    const FileLock lock(path);
    lock.write_all(to_json(record).dump() + "\n", path);
}

std::vector<HeightRecord> load_table(const std::filesystem::path& path) { return read_records(path); }

std::vector<HeightRecord> compact(const std::vector<HeightRecord>& records) {
    std::vector<HeightRecord> out;
    for (const auto& r : records) {
        auto it = std::find_if(out.begin(), out.end(), [&](const HeightRecord& o) { return o.lambda == r.lambda; });
        if (it == out.end()) {
            out.push_back(r);
        } else if (r.upper < it->upper || (r.upper == it->upper && r.exact && !it->exact)) {
            *it = r;
        }
    }
    return out;
}

void compact_table(const std::filesystem::path& path) {
    const FileLock lock(path);
    const auto records = compact(read_records(path));
    std::ostringstream os;
    for (const auto& r : records) os << to_json(r).dump() << "\n";
    lock.truncate(path);
    lock.write_all(os.str(), path);
}

}  // namespace belyi
