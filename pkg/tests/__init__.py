# Testes do Contorno Duplo.
