"""ログ集約処理のテスト。"""

from __future__ import annotations

import logging
import queue

from utils.logging_config import LOG_QUEUE_STOP_SIGNAL, configure_queue_logging, run_log_writer


def test_log_writer_appends_records_until_stop_signal(tmp_path):
    log_file_path = tmp_path / "toolkit.log"
    log_record_queue: queue.Queue = queue.Queue()
    message = "開始: 検査を実行します。suite=%s"
    log_record_queue.put(logging.LogRecord("cli.selftest", logging.INFO, __file__, 0, message, ("laws",), None))
    log_record_queue.put(LOG_QUEUE_STOP_SIGNAL)

    run_log_writer(log_record_queue, log_file_path)

    lines = log_file_path.read_text(encoding="utf-8").splitlines()
    assert lines[0].endswith("cli.selftest - 開始: 検査を実行します。suite=laws")
    assert lines[-1].endswith("完了: ログを書き込みました。records=1")


def test_queue_logging_replaces_root_handlers():
    root_logger = logging.getLogger()
    saved_handlers, saved_level = root_logger.handlers[:], root_logger.level
    log_record_queue: queue.Queue = queue.Queue()
    try:
        configure_queue_logging(log_record_queue)
        logging.getLogger("deciders.bounded").info("終了: 判定しました。")
        assert log_record_queue.get_nowait().getMessage() == "終了: 判定しました。"
    finally:
        root_logger.handlers[:] = saved_handlers
        root_logger.setLevel(saved_level)
