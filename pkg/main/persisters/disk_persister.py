import csv
import io
import json
import os


class DiskPersister:
    def __init__(self, base_path=""):
        self.base_path = base_path

    def save_text_file(self, data, file_path):
        path = os.path.join(self.base_path, file_path)

        self.__make_sure_path_exists(path)

        with open(path, 'w', encoding="utf-8") as file:
            file.write(data)

    def read_text_file(self, file_path):
        path = os.path.join(self.base_path, file_path)

        with open(path, 'r', encoding="utf-8") as file:
            return file.read()

    def save_json_file(self, content, file_path):
        self.save_text_file(json.dumps(content, indent=2, ensure_ascii=False) + "\n", file_path)

    def read_json_file(self, file_path):
        return json.loads(self.read_text_file(file_path))

    def read_csv_rows(self, file_path, comment_prefix="#"):
        """Non-empty CSV rows, skipping lines that start with `comment_prefix`."""
        lines = [line for line in self.read_text_file(file_path).splitlines()
                 if line.strip() and not line.lstrip().startswith(comment_prefix)]

        return [row for row in csv.reader(io.StringIO("\n".join(lines))) if row]

    def is_path_exists(self, relative_path):
        return os.path.exists(os.path.join(self.base_path, relative_path))

    def __make_sure_path_exists(self, path):
        directory_path = os.path.dirname(path)

        if directory_path and not os.path.exists(directory_path):
            os.makedirs(directory_path)
