from carc.cli import entrypoint

entrypoint()
